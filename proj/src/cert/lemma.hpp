#pragma once

#include "cert/certificate.hpp"
#include "solve/frexlet.hpp"

namespace frex {

// A named, constant-free equation with a proof over the fral; holds in
// every model of the theory.
struct Lemma {
  std::string name;
  Equation eq;
  Derivation proof;
};

// Runs the fral solver on the goal and packages the result.
Result<Lemma> mk_lemma(const Fral& f, std::string name, const Goal& g);

// Serializes a lemma as a certificate (linear form, named in the metadata).
Result<std::string> lemma_certificate(const Fral& f, const Lemma& lemma);

}  // namespace frex
