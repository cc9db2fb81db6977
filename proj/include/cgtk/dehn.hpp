#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "cgtk/presentation.hpp"
#include "cgtk/word.hpp"

namespace cgtk {

/// One replacement: the current word P U S became reduce(P V^-1 S), where
/// R = U V is a closure member and |P| = position.
struct DehnStep {
  std::size_t position = 0;
  Word u;
  Word relator;
  Word complement;
};

/// Each entry contributes the factor conjugator * relator^-1 * conjugator^-1
/// on the left of the running word.
struct CertificateEntry {
  Word conjugator;
  Word relator;
};

struct DehnTrace {
  std::vector<DehnStep> steps;
  std::vector<CertificateEntry> certificate;
};

struct DehnResult {
  Word residual;
  DehnTrace trace;
};

/// Rewrites the leftmost, then longest, then lexicographically least
/// over-half relator prefix (2|U| > |R|) until none remains.
/// Throws UnknownGenerator for letters outside the alphabet.
DehnResult dehn_reduce(const Presentation& p, const Word& w);

/// Applies the certificate to w; yields the residual of the reduction.
Word replay_certificate(const Word& w, const std::vector<CertificateEntry>& certificate);

enum class DehnOutcome { Trivial, NontrivialCertified, Unknown };
std::string_view to_string(DehnOutcome outcome);

struct DehnVerdict {
  DehnOutcome outcome = DehnOutcome::Unknown;
  Word residual;
  DehnTrace trace;
};

DehnVerdict decide(const Presentation& p, const Word& w);

/// True when no over-half relator prefix occurs in w.
bool dehn_irreducible(const Presentation& p, const Word& w);

struct AbelianizationResult {
  std::vector<std::int64_t> vector;
  /// The vector lies in the integer span of the relator exponent vectors.
  /// When false, w is nontrivial in the group.
  bool in_lattice = false;
};

AbelianizationResult abelianization_vector(const Presentation& p, const Word& w);

}  // namespace cgtk
