#include "uncrel/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>
#include <sstream>

#include "uncrel/errors.hpp"
#include "uncrel/functionals.hpp"

namespace uncrel::inequalities {

namespace {

using constants::FisherVariant;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct KindName {
  InequalityKind kind;
  std::string_view name;
  std::string_view statement;
};

const KindName kKinds[] = {
    {InequalityKind::thakkar_upper, "thakkar_upper", "<p^k> <= c_k W_{1+k/3}[rho], d = 3, k in {-2,-1}"},
    {InequalityKind::thakkar_lower, "thakkar_lower", "<p^k> >= c_k W_{1+k/3}[rho], d = 3, k in {1..4}"},
    {InequalityKind::daubechies, "daubechies", "<p^k> >= K'_d(k) q^{-k/d} W_{1+k/d}[rho] (k > 0); <= with K_d for k < 0"},
    {InequalityKind::heisenberg_general, "heisenberg_general",
     "<r^a>^{k/a} <p^k> >= F(d,a,k) q^{-k/d} N^{1+k(1/a+1/d)}"},
    {InequalityKind::heisenberg_d3, "heisenberg_d3", "<r^a>^{k/a} <p^k> >= F(3,a,k) 2^{-k/3} N^{k/a+(k+3)/3}"},
    {InequalityKind::negative_order, "negative_order",
     "<r^a>^{k/a} <p^k> <= G_d(a,k) q^{-k/d} N^{1+k(1/a+1/d)}, k < 0"},
    {InequalityKind::zumbach, "zumbach", "<p^2> <= (1/2)[1 + C_d (N/q)^{2/d}] I[rho]"},
    {InequalityKind::zumbach_conjugate, "zumbach_conjugate", "<r^2> <= (1/2)[1 + C_d (N/q)^{2/d}] I[gamma]"},
    {InequalityKind::fisher_product_heisenberg, "fisher_product_heisenberg",
     "I[rho] I[gamma] >= 4 <r^2><p^2> / [1 + C_d (N/q)^{2/d}]^2"},
    {InequalityKind::fisher_product_N, "fisher_product_N", "I[rho] I[gamma] >= general or electronic N-bound"},
    {InequalityKind::fisher_product_largeN, "fisher_product_largeN", "I[rho] I[gamma] >= large-N fermion or electron bound"},
    {InequalityKind::fisher_d3, "fisher_d3", "I[rho] I[gamma] >= three-dimensional electronic bound"},
    {InequalityKind::cramer_rao, "cramer_rao", "I[rho] V[rho] >= d^2"},
    {InequalityKind::fisher_real_4d2, "fisher_real_4d2", "I[rho] I[gamma] >= 4 d^2 for real wavefunctions"},
};

double pos_moment(const DensityPair& pair, double a, const math::QuadratureSpec& spec) {
  return functionals::radial_moment(pair.position, a, spec).value;
}

double mom_moment(const DensityPair& pair, double k, const math::QuadratureSpec& spec) {
  return functionals::radial_moment(pair.momentum, k, spec).value;
}

double zumbach_factor(const DensityPair& pair, int q) {
  const double n = pair.particle_count() / q;
  return 1.0 + constants::zumbach_constant(pair.dimension()) * std::pow(n, 2.0 / pair.dimension());
}

InequalityId id_of(InequalityKind kind, double alpha, double k) { return {kind, {alpha, k, FisherVariant::general}}; }

}  // namespace

std::string_view to_string(InequalityKind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k.name;
  }
  return "unknown";
}

std::string_view to_string(Direction dir) { return dir == Direction::lhs_ge_rhs ? "lhs_ge_rhs" : "lhs_le_rhs"; }

InequalityKind parse_inequality(std::string_view name) {
  if (name == "heisenberg") return InequalityKind::heisenberg_general;
  for (const auto& k : kKinds) {
    if (k.name == name) return k.kind;
  }
  throw FormatError("unknown inequality '" + std::string(name) + "'");
}

Direction direction_of(const InequalityId& id) {
  switch (id.kind) {
    case InequalityKind::thakkar_upper:
    case InequalityKind::negative_order:
    case InequalityKind::zumbach:
    case InequalityKind::zumbach_conjugate:
      return Direction::lhs_le_rhs;
    case InequalityKind::daubechies:
      return id.params.k < 0.0 ? Direction::lhs_le_rhs : Direction::lhs_ge_rhs;
    default:
      return Direction::lhs_ge_rhs;
  }
}

BoundReport make_report(const InequalityId& id, const DensityPair& pair, int q, double lhs, double rhs) {
  BoundReport r;
  r.id = id;
  r.direction = direction_of(id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = r.direction == Direction::lhs_ge_rhs ? lhs - rhs : rhs - lhs;
  r.ratio = lhs / rhs;
  r.satisfied = r.margin >= -1e-9 * std::max(std::abs(lhs), std::abs(rhs));
  r.label = pair.label;
  r.cfg = {pair.dimension(), pair.particle_count(), q};
  return r;
}

BoundReport check_semiclassical(const DensityPair& pair, int q, double k, const math::QuadratureSpec& spec) {
  const int d = pair.dimension();
  SystemConfig{d, pair.particle_count(), q}.validate();
  if (k == 0.0) throw DomainError("daubechies: k must be non-zero");
  const double w = functionals::entropic_moment(pair.position, 1.0 + k / d, spec).value;
  const double lhs = mom_moment(pair, k, spec);
  const double spin = std::pow(q, -k / d);
  const double semiclassical = constants::semiclassical_constant(d, k) * spin * w;
  const InequalityId id = id_of(InequalityKind::daubechies, 0.0, k);
  if (k < 0.0) {
    auto r = make_report(id, pair, q, lhs, semiclassical);
    r.note = "k < 0: semiclassical constant, reversed inequality";
    return r;
  }
  auto r = make_report(id, pair, q, lhs, constants::rigorous_constant(d, k) * spin * w);
  r.rhs_semiclassical = semiclassical;
  return r;
}

BoundReport check_thakkar(const DensityPair& pair, double k, bool upper, const math::QuadratureSpec& spec) {
  if (pair.dimension() != 3) throw DomainError("thakkar bounds are three-dimensional");
  const bool allowed = upper ? (k == -2.0 || k == -1.0) : (k == 1.0 || k == 2.0 || k == 3.0 || k == 4.0);
  if (!allowed) {
    std::ostringstream os;
    os << (upper ? "thakkar_upper requires k in {-2, -1}" : "thakkar_lower requires k in {1, 2, 3, 4}") << ", got "
       << k;
    throw DomainError(os.str());
  }
  const double w = functionals::entropic_moment(pair.position, 1.0 + k / 3.0, spec).value;
  const double lhs = mom_moment(pair, k, spec);
  auto r = make_report(id_of(upper ? InequalityKind::thakkar_upper : InequalityKind::thakkar_lower, 0.0, k), pair, 2,
                       lhs, constants::thakkar_coefficient(k) * w);
  r.note = "spin-1/2 coefficient c_k";
  return r;
}

BoundReport check_heisenberg(const DensityPair& pair, int q, double alpha, double k, const math::QuadratureSpec& spec) {
  if (!(alpha > 0.0) || !(k > 0.0)) throw DomainError("heisenberg: requires alpha > 0 and k > 0");
  const int d = pair.dimension();
  const double n = pair.particle_count();
  const double lhs = std::pow(pos_moment(pair, alpha, spec), k / alpha) * mom_moment(pair, k, spec);
  return make_report(id_of(InequalityKind::heisenberg_general, alpha, k), pair, q, lhs,
                     constants::heisenberg_rhs(d, alpha, k, n, q));
}

BoundReport check_heisenberg_d3(const DensityPair& pair, double alpha, double k, const math::QuadratureSpec& spec) {
  if (pair.dimension() != 3) throw DomainError("heisenberg_d3 requires d = 3");
  auto r = check_heisenberg(pair, 2, alpha, k, spec);
  r.id.kind = InequalityKind::heisenberg_d3;
  r.note = "electronic: q = 2";
  return r;
}

BoundReport check_negative_order(const DensityPair& pair, int q, double alpha, double k,
                                 const math::QuadratureSpec& spec) {
  const int d = pair.dimension();
  if (!(k < 0.0) || !(k > -d)) throw DomainError("negative_order requires -d < k < 0");
  if (d == 3 && k < -2.0) throw DomainError("negative_order in d = 3 requires k >= -2");
  const auto rhs = constants::negative_order_rhs(d, alpha, k, pair.particle_count(), q);
  const double lhs = std::pow(pos_moment(pair, alpha, spec), k / alpha) * mom_moment(pair, k, spec);
  auto r = make_report(id_of(InequalityKind::negative_order, alpha, k), pair, q, lhs, rhs.value);
  r.note = rhs.domain_note;
  return r;
}

std::vector<BoundReport> check_zumbach(const DensityPair& pair, int q, const math::QuadratureSpec& spec) {
  const double factor = 0.5 * zumbach_factor(pair, q);
  const double i_rho = functionals::fisher_information(pair.position, spec).value;
  const double i_gamma = functionals::fisher_information(pair.momentum, spec).value;
  std::vector<BoundReport> out;
  out.push_back(make_report(id_of(InequalityKind::zumbach, 0.0, 2.0), pair, q, mom_moment(pair, 2.0, spec),
                            factor * i_rho));
  out.push_back(make_report(id_of(InequalityKind::zumbach_conjugate, 2.0, 0.0), pair, q, pos_moment(pair, 2.0, spec),
                            factor * i_gamma));
  return out;
}

BoundReport check_fisher_product(const DensityPair& pair, int q, InequalityKind kind, FisherVariant variant,
                                 const math::QuadratureSpec& spec) {
  const int d = pair.dimension();
  const SystemConfig cfg{d, pair.particle_count(), q};
  cfg.validate();

  double rhs = 0.0;
  switch (kind) {
    case InequalityKind::fisher_product_heisenberg: {
      const double z = zumbach_factor(pair, q);
      rhs = 4.0 * pos_moment(pair, 2.0, spec) * mom_moment(pair, 2.0, spec) / (z * z);
      break;
    }
    case InequalityKind::fisher_product_N:
      if (variant != FisherVariant::general && variant != FisherVariant::electronic) {
        throw DomainError("fisher_product_N takes variant general or electronic");
      }
      rhs = constants::fisher_rhs(variant, cfg);
      break;
    case InequalityKind::fisher_product_largeN:
      if (variant != FisherVariant::large_N_fermion && variant != FisherVariant::large_N_electron) {
        throw DomainError("fisher_product_largeN takes variant large_N_fermion or large_N_electron");
      }
      rhs = constants::fisher_rhs(variant, cfg);
      break;
    case InequalityKind::fisher_d3:
      if (variant != FisherVariant::d3_electron && variant != FisherVariant::d3_large_N) {
        throw DomainError("fisher_d3 takes variant d3_electron or d3_large_N");
      }
      rhs = constants::fisher_rhs(variant, cfg);
      break;
    case InequalityKind::fisher_real_4d2:
      if (!pair.real_wavefunction) {
        throw PreconditionError("fisher_real_4d2 requires a real position or momentum wavefunction");
      }
      rhs = 4.0 * d * d;
      break;
    default:
      throw DomainError("check_fisher_product: not a Fisher-product relation");
  }
  const double lhs = functionals::fisher_information(pair.position, spec).value *
                     functionals::fisher_information(pair.momentum, spec).value;
  auto r = make_report({kind, {0.0, 0.0, variant}}, pair, q, lhs, rhs);
  if (kind != InequalityKind::fisher_product_heisenberg && kind != InequalityKind::fisher_real_4d2) {
    r.note = std::string("variant ") + std::string(constants::to_string(variant));
  }
  return r;
}

BoundReport check_cramer_rao(const DensityPair& pair, const math::QuadratureSpec& spec) {
  const int d = pair.dimension();
  const double lhs = functionals::fisher_information(pair.position, spec).value *
                     functionals::variance(pair.position, spec);
  auto r = make_report(id_of(InequalityKind::cramer_rao, 0.0, 0.0), pair, 1, lhs, static_cast<double>(d) * d);
  r.note = "total Fisher information, per-particle variance";
  return r;
}

BoundReport evaluate_strict(const InequalityId& id, const DensityPair& pair, int q, const math::QuadratureSpec& spec) {
  const auto& p = id.params;
  BoundReport r;
  switch (id.kind) {
    case InequalityKind::thakkar_upper: r = check_thakkar(pair, p.k, true, spec); break;
    case InequalityKind::thakkar_lower: r = check_thakkar(pair, p.k, false, spec); break;
    case InequalityKind::daubechies: r = check_semiclassical(pair, q, p.k, spec); break;
    case InequalityKind::heisenberg_general: r = check_heisenberg(pair, q, p.alpha, p.k, spec); break;
    case InequalityKind::heisenberg_d3: r = check_heisenberg_d3(pair, p.alpha, p.k, spec); break;
    case InequalityKind::negative_order: r = check_negative_order(pair, q, p.alpha, p.k, spec); break;
    case InequalityKind::zumbach: r = check_zumbach(pair, q, spec)[0]; break;
    case InequalityKind::zumbach_conjugate: r = check_zumbach(pair, q, spec)[1]; break;
    case InequalityKind::fisher_product_heisenberg:
    case InequalityKind::fisher_product_N:
    case InequalityKind::fisher_product_largeN:
    case InequalityKind::fisher_d3:
    case InequalityKind::fisher_real_4d2:
      r = check_fisher_product(pair, q, id.kind, p.variant, spec);
      break;
    case InequalityKind::cramer_rao: r = check_cramer_rao(pair, spec); break;
  }
  r.id.params = id.params;
  return r;
}

BoundReport evaluate(const InequalityId& id, const DensityPair& pair, int q, const math::QuadratureSpec& spec) {
  try {
    return evaluate_strict(id, pair, q, spec);
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    BoundReport r;
    r.id = id;
    r.direction = direction_of(id);
    r.lhs = r.rhs = r.margin = r.ratio = kNaN;
    r.hole = true;
    r.note = std::string(to_string(e.kind())) + ": " + e.what();
    r.label = pair.label;
    r.cfg = {pair.dimension(), pair.particle_count(), q};
    return r;
  }
}

namespace {

std::vector<std::size_t> order_by_n(const std::vector<DensityPair>& fleet) {
  std::vector<std::size_t> idx(fleet.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return fleet[a].particle_count() < fleet[b].particle_count();
  });
  return idx;
}

}  // namespace

std::vector<BoundReport> sweep(const InequalityId& id, const std::vector<DensityPair>& fleet, int q,
                               const math::QuadratureSpec& spec) {
  if (fleet.empty()) throw DomainError("sweep: fleet is empty");
  const auto idx = order_by_n(fleet);
  std::vector<BoundReport> out(fleet.size());
  std::vector<std::exception_ptr> errors(fleet.size());
  const int n = static_cast<int>(fleet.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = evaluate(id, fleet[idx[static_cast<std::size_t>(i)]], q, spec);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<BoundReport> sweep_serial(const InequalityId& id, const std::vector<DensityPair>& fleet, int q,
                                      const math::QuadratureSpec& spec) {
  if (fleet.empty()) throw DomainError("sweep: fleet is empty");
  std::vector<BoundReport> out;
  out.reserve(fleet.size());
  for (std::size_t i : order_by_n(fleet)) out.push_back(evaluate(id, fleet[i], q, spec));
  return out;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    for (const auto& k : kKinds) v.push_back({k.kind, k.statement});
    return v;
  }();
  return entries;
}

}  // namespace uncrel::inequalities
