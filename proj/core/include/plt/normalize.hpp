#pragma once

#include "plt/syntax.hpp"

namespace plt {

// capture-avoiding t[u/x]
TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& u);

// step bound for normalization; overridable via the PLT_FUEL environment
// variable (checked once per process)
long default_fuel();

// beta-normal form by leftmost-outermost reduction; throws FuelError if the
// step bound is exhausted
TermPtr normalize(const TermPtr& t, long fuel = -1);

// eta-long form of a beta-normal term, driven by its type; `sig` supplies
// the types of the Gamma constants
TermPtr eta_long(const TermPtr& normal, const TypePtr& ty, const Signature& sig);

// t =_{beta eta} u at the given type: compare beta-normal eta-long forms
bool beta_eta_equal(const TermPtr& t, const TermPtr& u, const TypePtr& ty, const Signature& sig);

}  // namespace plt
