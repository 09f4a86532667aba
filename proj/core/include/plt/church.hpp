#pragma once

#include "plt/syntax.hpp"

namespace plt {

// Str_Sigma = (o -o o) -> ... -> (o -o o) -> o -> o, one repetition per
// letter; when kappa is non-null every base-type leaf is substituted by it
TypePtr str_type(const Signature& sig, const TypePtr& kappa = nullptr);

// open form w_: a (b (... eps)) over the signature constants
TermPtr church_encode_open(const std::string& word, const Signature& sig);

// closed form <w> : Str_Sigma, first letter outermost
TermPtr church_encode(const std::string& word, const Signature& sig);

// normalize and read back the unique word; accepts both the open form
// (type o) and the closed form (type Str_Gamma)
std::string church_readback(const TermPtr& t, const Signature& sig);

}  // namespace plt
