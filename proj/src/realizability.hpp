#pragma once

#include "density.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace indturan {

/// a/b in lowest terms with 0 < a < b, representing the exponent 2 - a/b.
class ReducedRational {
 public:
  /// Reduces (a, b). Throws InvalidArgument unless 1 <= a < b after reduction.
  ReducedRational(std::int64_t a, std::int64_t b);

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  Rational exponent() const { return Rational(2) - Rational(BigInt(a_), BigInt(b_)); }

  friend bool operator==(const ReducedRational&, const ReducedRational&) = default;

 private:
  std::int64_t a_;
  std::int64_t b_;
};

enum class BaseKind { Ktl, Theta, HeightTwo, Tr11 };

std::string_view to_string(BaseKind kind);

/// Which starting family a certificate builds from, with its parameters:
/// Ktl uses t; Theta uses len; HeightTwo uses r and t; Tr11 uses r.
struct BaseFamily {
  BaseKind kind = BaseKind::Ktl;
  int t = 0;
  int len = 0;
  int r = 0;

  friend bool operator==(const BaseFamily&, const BaseFamily&) = default;
};

struct RealizabilityCertificate {
  ReducedRational target{1, 2};
  BaseFamily base;
  int reductions = 0;
  /// Power parameter; the certificate is claimed for every l >= l0(F), and l
  /// only fixes which witness graph gets built.
  int l = 2;
  Rational exponent;
};

/// b0 > a0 and b0 >= max{a0, (a0-1)^2} for the reduced fraction a0/b0.
bool qualifies(std::int64_t a, std::int64_t b);

/// Case analysis on b mod a. Throws NotQualified, or CertificateInvalid if the
/// residue bookkeeping ever produces a negative reduction count.
RealizabilityCertificate derive(std::int64_t a, std::int64_t b, int l = 2);

struct Witness {
  RootedGraph final_rooted;
  Bipartition final_parts;
  Graph h;
  int s0 = 0;
};

/// Base rooted graph, `reductions` applications of attach_ktt_rooted(., 1),
/// then H = F_final^l with the roots forgotten. s0 = |V(H)|.
Witness build_witness(const RealizabilityCertificate& cert, int l);

/// Base rooted graph of a certificate together with its 2-colouring.
AttachedRooted base_rooted(const BaseFamily& base);

enum class CertificateCheck { Ok, ExponentMismatch, BaseInvalid, RhoMismatch, Unbalanced, NotBipartite };

std::string_view to_string(CertificateCheck check);

/// Re-derives everything through the constructors and the density module,
/// independently of derive()'s residue arithmetic.
CertificateCheck verify_certificate(const RealizabilityCertificate& cert);

struct SweepEntry {
  std::int64_t a = 0;
  std::int64_t b = 0;
  RealizabilityCertificate certificate;
  CertificateCheck check = CertificateCheck::Ok;
};

/// Every reduced qualifying (a, b) with a <= a_max, b <= b_max, in
/// lexicographic order. Throws InvalidArgument for bounds above 50.
std::vector<SweepEntry> enumerate_realizable(int a_max, int b_max, int threads = 1);

}  // namespace indturan
