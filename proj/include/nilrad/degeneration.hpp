#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilrad/law.hpp"
#include "nilrad/linalg.hpp"

namespace nilrad {

/// Diagonal part of g_phi: rows (1,...,1) and phi, so that a is admissible iff rows * a = 0.
struct GPhiDiagonal {
  RMatrix equalities;  // 2 x n
};

GPhiDiagonal gphi_diag(const RVector& phi);

struct InvariantSummary {
  int dim_der = 0;
  SeriesDims dcs;
  SeriesDims derived;
  bool operator==(const InvariantSummary&) const = default;
};

InvariantSummary invariant_summary(const LieLaw& law);

/// a_i + a_j - a_k: the rate at which exp(-tX) shrinks the slot coefficient.
Rational exponent(const RVector& x, const Slot& s);

struct DegenerationCertificate {
  RVector x;                  // diagonal of X
  std::vector<Slot> dropped;  // slots with positive exponent
  LieLaw limit;
  InvariantSummary before;
  InvariantSummary after;
};

/// Validates a diagonal X against the law and phi, returning the certificate or a reason.
struct CertificateCheck {
  std::optional<DegenerationCertificate> certificate;
  std::string reason;
};
CertificateCheck check_certificate(const LieLaw& law, const RVector& phi, const RVector& x);

/// Searches diagonal X in g_phi with every slot exponent >= 0 and at least one > 0. Single-slot
/// drops are tried before general ones; among the candidates found, one whose limit has
/// different invariants is preferred. Returns nullopt when no slot can be made strict.
std::optional<DegenerationCertificate> find_degeneration(const LieLaw& law, const RVector& phi);

enum class Assessment { NotEinstein, Indeterminate };

std::string to_string(Assessment a);

/// NotEinstein when dim Der, the descending central series or the derived series of the
/// limit differ from the original.
Assessment assess(const DegenerationCertificate& certificate);

}  // namespace nilrad
