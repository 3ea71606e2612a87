#pragma once

// Catalog of the uncertainty relations, each evaluated on a DensityPair into a BoundReport.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uncrel/constants.hpp"
#include "uncrel/densities.hpp"
#include "uncrel/mathcore.hpp"

namespace uncrel::inequalities {

enum class InequalityKind {
  thakkar_upper,
  thakkar_lower,
  daubechies,
  heisenberg_general,
  heisenberg_d3,
  negative_order,
  zumbach,
  zumbach_conjugate,
  fisher_product_heisenberg,
  fisher_product_N,
  fisher_product_largeN,
  fisher_d3,
  cramer_rao,
  fisher_real_4d2,
};

enum class Direction { lhs_ge_rhs, lhs_le_rhs };

std::string_view to_string(InequalityKind kind);
std::string_view to_string(Direction dir);
/// Accepts every catalog name plus the alias "heisenberg" for heisenberg_general.
InequalityKind parse_inequality(std::string_view name);

struct InequalityParams {
  double alpha = 2.0;
  double k = 2.0;
  constants::FisherVariant variant = constants::FisherVariant::general;
};

struct InequalityId {
  InequalityKind kind = InequalityKind::heisenberg_general;
  InequalityParams params;
};

/// Direction of a relation; only daubechies depends on the parameters (sign of k).
Direction direction_of(const InequalityId& id);

struct BoundReport {
  InequalityId id;
  Direction direction = Direction::lhs_ge_rhs;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // lhs - rhs or rhs - lhs, positive when satisfied with slack
  double ratio = 0.0;   // lhs / rhs
  bool satisfied = false;
  bool hole = false;  // parameter domain or integrability violated; lhs/rhs are NaN
  std::string note;
  std::string label;
  SystemConfig cfg;
  std::optional<double> rhs_semiclassical;  // daubechies only: bound with K_d instead of K'_d
};

/// Fills margin, ratio and the verdict from lhs, rhs and direction.
BoundReport make_report(const InequalityId& id, const DensityPair& pair, int q, double lhs, double rhs);

/// <p^k> against K'_d(k) q^{-k/d} W_{1+k/d}[rho] for k > 0 (K_d(k) recorded alongside), and
/// against K_d(k) q^{-k/d} W_{1+k/d}[rho] with the inequality reversed for k < 0.
BoundReport check_semiclassical(const DensityPair& pair, int q, double k, const math::QuadratureSpec& spec = {});

/// Three-dimensional form <p^k> vs c_k W_{1+k/3}: upper for k in {-2, -1}, lower for k in 1..4.
BoundReport check_thakkar(const DensityPair& pair, double k, bool upper, const math::QuadratureSpec& spec = {});

/// <r^alpha>^{k/alpha} <p^k> >= F(d, alpha, k) q^{-k/d} N^{1 + k(1/alpha + 1/d)}, alpha, k > 0.
BoundReport check_heisenberg(const DensityPair& pair, int q, double alpha, double k,
                             const math::QuadratureSpec& spec = {});

/// The d = 3 electronic (q = 2) specialization of check_heisenberg.
BoundReport check_heisenberg_d3(const DensityPair& pair, double alpha, double k,
                                const math::QuadratureSpec& spec = {});

/// <r^alpha>^{k/alpha} <p^k> <= G_d(alpha, k) q^{-k/d} N^{...} for -d < k < 0 (k >= -2 when d = 3).
BoundReport check_negative_order(const DensityPair& pair, int q, double alpha, double k,
                                 const math::QuadratureSpec& spec = {});

/// Both orientations: <p^2> vs I[rho] and <r^2> vs I[gamma].
std::vector<BoundReport> check_zumbach(const DensityPair& pair, int q, const math::QuadratureSpec& spec = {});

/// I[rho] I[gamma] against the bound selected by kind (fisher_product_* , fisher_d3,
/// fisher_real_4d2) and, where applicable, the variant.
BoundReport check_fisher_product(const DensityPair& pair, int q, InequalityKind kind,
                                 constants::FisherVariant variant, const math::QuadratureSpec& spec = {});

/// I[rho] V[rho] >= d^2 with total I and per-particle V.
BoundReport check_cramer_rao(const DensityPair& pair, const math::QuadratureSpec& spec = {});

/// Dispatches on id and lets every error propagate.
BoundReport evaluate_strict(const InequalityId& id, const DensityPair& pair, int q,
                            const math::QuadratureSpec& spec = {});

/// evaluate_strict with library errors other than format errors turned into hole reports.
BoundReport evaluate(const InequalityId& id, const DensityPair& pair, int q, const math::QuadratureSpec& spec = {});

/// evaluate over a fleet, OpenMP-parallel, output ordered by N (input order among equal N).
std::vector<BoundReport> sweep(const InequalityId& id, const std::vector<DensityPair>& fleet, int q,
                               const math::QuadratureSpec& spec = {});

/// Serial reference for sweep.
std::vector<BoundReport> sweep_serial(const InequalityId& id, const std::vector<DensityPair>& fleet, int q,
                                      const math::QuadratureSpec& spec = {});

struct CatalogEntry {
  InequalityKind kind;
  std::string_view statement;
};

const std::vector<CatalogEntry>& catalog();

}  // namespace uncrel::inequalities
