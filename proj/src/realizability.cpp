#include "realizability.hpp"

#include "error.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <string>
#include <thread>

namespace indturan {

ReducedRational::ReducedRational(std::int64_t a, std::int64_t b) {
  require(a >= 1 && b >= 1, ErrorCode::InvalidArgument, "a and b must be positive");
  const auto g = std::gcd(a, b);
  a_ = a / g;
  b_ = b / g;
  require(a_ < b_, ErrorCode::InvalidArgument,
          "need a/b < 1, got " + std::to_string(a) + "/" + std::to_string(b));
}

std::string_view to_string(BaseKind kind) {
  switch (kind) {
    case BaseKind::Ktl: return "ktl";
    case BaseKind::Theta: return "theta";
    case BaseKind::HeightTwo: return "height_two";
    case BaseKind::Tr11: return "tr11";
  }
  return "unknown";
}

std::string_view to_string(CertificateCheck check) {
  switch (check) {
    case CertificateCheck::Ok: return "Ok";
    case CertificateCheck::ExponentMismatch: return "ExponentMismatch";
    case CertificateCheck::BaseInvalid: return "BaseInvalid";
    case CertificateCheck::RhoMismatch: return "RhoMismatch";
    case CertificateCheck::Unbalanced: return "Unbalanced";
    case CertificateCheck::NotBipartite: return "NotBipartite";
  }
  return "unknown";
}

bool qualifies(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) return false;
  const auto g = std::gcd(a, b);
  const auto a0 = a / g;
  const auto b0 = b / g;
  return b0 > a0 && b0 >= std::max(a0, (a0 - 1) * (a0 - 1));
}

RealizabilityCertificate derive(std::int64_t a_in, std::int64_t b_in, int l) {
  require(qualifies(a_in, b_in), ErrorCode::NotQualified,
          std::to_string(a_in) + "/" + std::to_string(b_in) + " does not satisfy b >= max{a, (a-1)^2}");
  require(l >= 1, ErrorCode::InvalidArgument, "l must be positive");
  const ReducedRational target(a_in, b_in);
  const auto a = target.a();
  const auto b = target.b();
  const auto residue = b % a;

  RealizabilityCertificate cert;
  cert.target = target;
  cert.l = l;
  cert.exponent = target.exponent();

  // Each attach_ktt_rooted(., 1) adds 1 to rho = b/a, i.e. adds a to b.
  std::int64_t base_b = 0;
  if (a == 1) {
    cert.base = {BaseKind::Ktl, static_cast<int>(b), 0, 0};
    base_b = b;
  } else if (residue == 1) {
    cert.base = {BaseKind::Theta, 0, static_cast<int>(a + 1), 0};
    base_b = a + 1;
  } else if (residue == a - 1) {
    cert.base = {BaseKind::Tr11, 0, 0, static_cast<int>(a - 1)};
    base_b = 2 * a - 1;
  } else {
    // 2 <= residue <= a-2: T_{a-1, a-1-residue} has rho (a-1)(a-residue)/a.
    const auto t = a - 1 - residue;
    cert.base = {BaseKind::HeightTwo, static_cast<int>(t), 0, static_cast<int>(a - 1)};
    base_b = (a - 1) * (a - residue);
  }
  const auto steps = b - base_b;
  if (steps < 0 || steps % a != 0)
    fail(ErrorCode::CertificateInvalid, "residue bookkeeping produced a negative or fractional reduction count");
  cert.reductions = static_cast<int>(steps / a);
  if (verify_certificate(cert) != CertificateCheck::Ok)
    fail(ErrorCode::CertificateInvalid, "derived certificate does not verify");
  return cert;
}

AttachedRooted base_rooted(const BaseFamily& base) {
  RootedGraph f;
  switch (base.kind) {
    case BaseKind::Ktl: f = rooted_star(base.t); break;
    case BaseKind::Theta: f = rooted_path(base.len); break;
    case BaseKind::HeightTwo:
      require(base.t >= 1 && base.r >= base.t + 2, ErrorCode::InvalidArgument, "height-two base needs r >= t + 2 >= 3");
      f = height_two_tree(base.r, base.t);
      break;
    case BaseKind::Tr11: f = tree_r11(base.r); break;
  }
  auto parts = two_colouring(f.graph);
  require(parts.has_value(), ErrorCode::NotBipartite, "base family is not bipartite");
  return {std::move(f), std::move(*parts)};
}

namespace {

AttachedRooted reduced_rooted(const RealizabilityCertificate& cert) {
  require(cert.reductions >= 0, ErrorCode::InvalidArgument, "negative reduction count");
  auto current = base_rooted(cert.base);
  for (int i = 0; i < cert.reductions; ++i) current = attach_ktt_rooted(current.rooted, current.parts, 1);
  return current;
}

}  // namespace

Witness build_witness(const RealizabilityCertificate& cert, int l) {
  auto final_rooted = reduced_rooted(cert);
  Witness w;
  w.h = rooted_power(final_rooted.rooted, l).graph;
  w.s0 = w.h.order();
  w.final_rooted = std::move(final_rooted.rooted);
  w.final_parts = std::move(final_rooted.parts);
  return w;
}

CertificateCheck verify_certificate(const RealizabilityCertificate& cert) {
  if (cert.exponent != cert.target.exponent()) return CertificateCheck::ExponentMismatch;
  AttachedRooted f;
  try {
    f = reduced_rooted(cert);
  } catch (const Error&) {
    return CertificateCheck::BaseInvalid;
  }
  if (rho(f.rooted) != Rational(BigInt(cert.target.b()), BigInt(cert.target.a()))) return CertificateCheck::RhoMismatch;
  if (!is_balanced(f.rooted).balanced) return CertificateCheck::Unbalanced;
  if (!two_colouring(f.rooted.graph).has_value()) return CertificateCheck::NotBipartite;
  return CertificateCheck::Ok;
}

std::vector<SweepEntry> enumerate_realizable(int a_max, int b_max, int threads) {
  require(a_max >= 1 && b_max >= 1 && a_max <= 50 && b_max <= 50, ErrorCode::InvalidArgument,
          "sweep bounds must lie in [1, 50]");
  std::vector<SweepEntry> entries;
  for (std::int64_t a = 1; a <= a_max; ++a)
    for (std::int64_t b = a + 1; b <= b_max; ++b)
      if (std::gcd(a, b) == 1 && qualifies(a, b)) entries.push_back({a, b, {}, CertificateCheck::Ok});

  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(std::max(1, threads)));
  auto work = [&](std::size_t begin, std::size_t stride) {
    try {
      for (std::size_t i = begin; i < entries.size(); i += stride) {
        auto& e = entries[i];
        e.certificate = derive(e.a, e.b);
        e.check = verify_certificate(e.certificate);
      }
    } catch (...) {
      errors[begin] = std::current_exception();
    }
  };
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return entries;
}

}  // namespace indturan
