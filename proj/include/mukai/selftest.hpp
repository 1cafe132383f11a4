#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mukai/fixtures.hpp"
#include "mukai/json_io.hpp"

namespace mukai {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string note;
};

// Structural identities of the transform: inversion, basis values, the
// degree-0 law, adjointness, the restricted isometry, the lattice swap,
// the quotient isometry, and the Todd identities.
std::vector<CheckLine> lemma_checks(const K3Model& model, const FmAction& fm, std::uint64_t seed,
                                    int trials);

std::vector<FixtureReport> fixture_checks(const K3Model& model, const FmAction& fm);

// Deterministic text deriving the two candidate degree-0 images of 1 and
// the transform tables each induces; golden-file stable.
std::string erratum_report(const K3Model& model, const FmAction& fm);

// The base-valued pairing is not preserved globally: the modified
// self-pairing of f(1) differs from that of 1. Computed and reported.
json modified_pairing_note(const K3Model& model, const FmAction& fm);

json selftest_json(const K3Model& model, const FmAction& fm, std::uint64_t seed, bool with_lemma,
                   bool with_fixtures, bool with_erratum);

}  // namespace mukai
