#include "patternsc/classify.hpp"

#include <stdexcept>

#include "patternsc/orbits.hpp"
#include "patternsc/parallel.hpp"

namespace patternsc {

namespace {

void require_role(const FqUpperMatrix& m, Role role, const char* what) {
  if (m.role() != role) throw RoleMismatch(std::string(what) + " expects a " + to_string(role) + " matrix");
}

int lam_inverse(const FqUpperMatrix& lam, Position pos) {
  const int v = lam.get(pos);
  if (v == 0) throw std::logic_error("division by a zero entry of lambda");
  return mod_inverse(v, lam.p());
}

std::uint64_t q_power(int p, std::size_t exponent) { return int_pow(static_cast<std::uint64_t>(p), static_cast<int>(exponent)); }

}  // namespace

FqUpperMatrix star_primal(const LabeledSetPartition& lam, const FqUpperMatrix& x, const FqUpperMatrix& y) {
  require_role(x, Role::kPrimal, "star_primal");
  require_role(y, Role::kPrimal, "star_primal");
  const int n = x.n();
  FqUpperMatrix out = x + y;
  for (const auto& arc : lam.arcs()) {
    const int j = arc.pos.i;
    const int k = arc.pos.j;
    const int inv = lam_inverse(lam.matrix(), arc.pos);
    for (int i = 1; i < j; ++i) {
      const int xik = x.get(i, k);
      if (xik == 0) continue;
      for (int l = k + 1; l <= n; ++l) {
        const int yjl = y.get(j, l);
        if (yjl != 0) out.add({i, l}, static_cast<long long>(xik) * yjl * inv);
      }
    }
  }
  return out;
}

FqUpperMatrix star_dual(const LabeledSetPartition& lam, const FqUpperMatrix& eta, const FqUpperMatrix& mu) {
  require_role(eta, Role::kDual, "star_dual");
  require_role(mu, Role::kDual, "star_dual");
  FqUpperMatrix out = eta + mu;
  const PositionSet& domain = out.domain();
  for (const auto& arc : lam.arcs()) {
    const int i = arc.pos.i;
    const int l = arc.pos.j;
    const int inv = lam_inverse(lam.matrix(), arc.pos);
    for (int j = i + 1; j < l; ++j)
      for (int k = j + 1; k < l; ++k) {
        if (!domain.contains(j, k)) continue;
        const long long term = static_cast<long long>(eta.get(j, l)) * mu.get(i, k);
        if (term != 0) out.add({j, k}, term * inv);
      }
  }
  return out;
}

FqUpperMatrix rep_map_primal(const SuperclassIndex& idx) {
  const PositionSets sets = position_sets(idx.poset, idx.lam);
  const PositionSet outside = idx.x.support() - sets.aux;
  if (!outside.empty())
    throw SupportViolation("X is not supported on aux_P(lambda)", outside.to_vector().front());
  const FqUpperMatrix left = idx.x.restricted_to(sets.auxL);
  const FqUpperMatrix right = idx.x.restricted_to(sets.auxR - sets.auxL);
  return star_primal(idx.lam, left, right);
}

FqUpperMatrix rep_map_dual(const SupercharacterIndex& idx) {
  const PositionSets sets = position_sets(idx.poset, idx.lam);
  const PositionSet outside = idx.eta.support() - sets.coaux;
  if (!outside.empty())
    throw SupportViolation("eta is not supported on coaux_P(lambda)", outside.to_vector().front());
  const FqUpperMatrix left = idx.eta.restricted_to(sets.coauxL);
  const FqUpperMatrix right = idx.eta.restricted_to(sets.coauxR - sets.coauxL);
  return star_dual(idx.lam, left, right);
}

FqUpperMatrix superclass_representative(const SuperclassIndex& idx) {
  return idx.lam.matrix() + rep_map_primal(idx);
}

FqUpperMatrix supercharacter_functional(const SupercharacterIndex& idx) {
  return idx.lam.matrix() + rep_map_dual(idx);
}

std::vector<FqUpperMatrix> enumerate_supported(const Poset& poset, int p, Role role, const PositionSet& support) {
  const auto positions = support.to_vector();
  for (const auto& pos : positions)
    if (!poset.contains(pos)) throw SupportViolation("support outside the poset", pos);
  std::vector<FqUpperMatrix> out;
  std::vector<int> digits(positions.size(), 0);
  while (true) {
    FqUpperMatrix m(poset, p, role);
    for (std::size_t t = 0; t < positions.size(); ++t) m.set(positions[t], digits[t]);
    out.push_back(std::move(m));
    std::size_t t = positions.size();
    while (t > 0 && digits[t - 1] == p - 1) digits[--t] = 0;
    if (t == 0) break;
    ++digits[t - 1];
  }
  return out;
}

std::vector<SuperclassIndex> superclasses(const Poset& poset, int p, int jobs) {
  require_normal(poset);
  const auto lams = enumerate_partitions(poset, p, Role::kPrimal);
  std::vector<std::vector<SuperclassIndex>> blocks(lams.size());
  parallel_for(lams.size(), jobs, [&](std::size_t t) {
    const auto sets = position_sets(poset, lams[t]);
    for (auto& x : enumerate_supported(poset, p, Role::kPrimal, sets.aux))
      blocks[t].push_back(SuperclassIndex{poset, lams[t], std::move(x)});
  });
  std::vector<SuperclassIndex> out;
  for (auto& block : blocks)
    for (auto& idx : block) out.push_back(std::move(idx));
  return out;
}

std::vector<SupercharacterIndex> supercharacters(const Poset& poset, int p, int jobs) {
  require_normal(poset);
  const auto lams = enumerate_partitions(poset, p, Role::kDual);
  std::vector<std::vector<SupercharacterIndex>> blocks(lams.size());
  parallel_for(lams.size(), jobs, [&](std::size_t t) {
    const auto sets = position_sets(poset, lams[t]);
    for (auto& eta : enumerate_supported(poset, p, Role::kDual, sets.coaux))
      blocks[t].push_back(SupercharacterIndex{poset, lams[t], std::move(eta)});
  });
  std::vector<SupercharacterIndex> out;
  for (auto& block : blocks)
    for (auto& idx : block) out.push_back(std::move(idx));
  return out;
}

std::uint64_t superclass_size(const SuperclassIndex& idx) {
  return q_power(idx.p(), position_sets(idx.poset, idx.lam).adj_P.size());
}

std::uint64_t degree(const SupercharacterIndex& idx) {
  const auto sets = position_sets(idx.poset, idx.lam);
  if (sets.coadjL_P.size() != sets.coadjR_P.size())
    throw std::logic_error("coadjL and coadjR have different sizes for " + to_arc_notation(idx.lam));
  return q_power(idx.p(), sets.coadjL_P.size());
}

std::uint64_t norm_sq(const SupercharacterIndex& idx) {
  const auto sets = position_sets(idx.poset, idx.lam);
  return q_power(idx.p(), (sets.coadjL_P & sets.coadjR_P).size());
}

bool is_irreducible(const SupercharacterIndex& idx) {
  const auto arcs = idx.lam.arcs();
  for (const auto& ik : arcs)
    for (const auto& jl : arcs) {
      const int i = ik.pos.i, k = ik.pos.j, j = jl.pos.i, l = jl.pos.j;
      if (i < j && j < k && k < l && idx.poset.contains(i, j) && idx.poset.contains(j, k) &&
          idx.poset.contains(k, l))
        return false;
    }
  return true;
}

Restriction restrict_from_un(const Poset& poset, const LabeledSetPartition& lam_n) {
  require_normal(poset);
  if (lam_n.role() != Role::kDual) throw RoleMismatch("restrict_from_un expects a dual set partition");
  const int n = poset.n();
  if (lam_n.n() != n) throw std::invalid_argument("set partition and poset have different n");
  const Poset full = full_poset(n);
  LabeledSetPartition mu(lam_n.matrix().restricted_to(poset.relations()).with_domain(poset.relations()));
  const auto full_sets = position_sets(full, lam_n);
  const auto sets = position_sets(poset, mu);
  Restriction out{static_cast<int>(full_sets.coadjL_P.size()) - static_cast<int>(sets.coadjL_P.size()) -
                      static_cast<int>(sets.coaux.size()),
                  mu,
                  {}};
  if (out.exponent < 0) throw std::logic_error("negative restriction exponent");
  for (auto& eta : enumerate_supported(poset, lam_n.p(), Role::kDual, sets.coaux))
    out.terms.push_back(SupercharacterIndex{poset, mu, std::move(eta)});
  return out;
}

ElementaryFactorization elementary_factorization(const SupercharacterIndex& idx, std::uint64_t cap) {
  require_normal(idx.poset);
  const int n = idx.poset.n();
  const FqUpperMatrix mu = supercharacter_functional(idx);
  const OrbitSpace space(idx.poset, idx.p(), Role::kDual, full_poset(n).relations(), cap);
  auto [g, h] = find_orbit_witness(space, space.key(idx.lam.matrix()), space.key(mu), Side::kTwoSided);
  if (act_dual(g, idx.lam.matrix(), h) != mu) throw std::logic_error("orbit witness does not reproduce mu");
  ElementaryFactorization out{g, h, {}};
  for (const auto& arc : idx.lam.arcs()) {
    FqUpperMatrix alpha(idx.poset, idx.p(), Role::kDual);
    alpha.set(arc.pos, arc.value);
    out.factors.push_back(act_dual(g, alpha, h));
  }
  return out;
}

CyclotomicInt un_supercharacter_value(const LabeledSetPartition& lam, const LabeledSetPartition& mu) {
  if (lam.role() != Role::kDual || mu.role() != Role::kPrimal)
    throw RoleMismatch("un_supercharacter_value expects lam in S_n* and mu in S_n");
  const int p = lam.p();
  const auto lam_arcs = lam.arcs();
  const auto mu_arcs = mu.arcs();
  const PositionSet mu_support = mu.support();
  CyclotomicInt value = CyclotomicInt::integer(p, 1);
  for (const auto& arc : lam_arcs) {
    const int i = arc.pos.i;
    const int l = arc.pos.j;
    for (int j = i + 1; j < l; ++j)
      if (mu_support.contains(i, j) || mu_support.contains(j, l)) return CyclotomicInt(p);
    int inside = 0;
    for (const auto& m : mu_arcs)
      if (i < m.pos.i && m.pos.j < l) ++inside;
    const auto scale = static_cast<std::int64_t>(q_power(p, static_cast<std::size_t>(l - i - 1 - inside)));
    value = value * theta(Fp(p, static_cast<long long>(arc.value) * mu.matrix().get(arc.pos))).scaled(scale);
  }
  return value;
}

}  // namespace patternsc
