#include "patternsc/orbits.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "patternsc/fq.hpp"

namespace patternsc {

namespace {

constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();

}  // namespace

OrbitSpace::OrbitSpace(const Poset& poset, int p, Role role, const PositionSet& acting, std::uint64_t cap)
    : poset_(poset), p_(p), role_(role), size_(space_size(poset, p, cap)), positions_(poset.positions()) {
  require_supported_prime(p);
  const int m = static_cast<int>(positions_.size());
  place_.assign(m, 1);
  for (int t = m - 2; t >= 0; --t) place_[t] = place_[t + 1] * static_cast<std::uint64_t>(p);

  std::vector<int> slot_of(kMaxPositions, -1);
  for (int t = 0; t < m; ++t) slot_of[position_index(positions_[t].i, positions_[t].j)] = t;
  auto slot = [&](int i, int j) { return i < j ? slot_of[position_index(i, j)] : -1; };
  const int n = poset.n();

  for (const auto& ab : acting.to_vector()) {
    if (ab.j > n) throw std::invalid_argument("acting position outside [[n]]");
    const int a = ab.i;
    const int b = ab.j;
    for (int c = 1; c < p; ++c) {
      Generator left{Side::kLeft, ab, c, {}};
      Generator right{Side::kRight, ab, c, {}};
      if (role == Role::kPrimal) {
        // (gX)_ak += c X_bk ; (Xh)_ib += c X_ia
        for (int k = b + 1; k <= n; ++k) {
          if (slot(b, k) < 0) continue;
          if (slot(a, k) < 0)
            throw SupportViolation("left action of U_Q does not preserve n_P at " + to_string(Position{a, k}), {a, k});
          left.updates.push_back({slot(a, k), slot(b, k), c});
        }
        for (int i = 1; i < a; ++i) {
          if (slot(i, a) < 0) continue;
          if (slot(i, b) < 0)
            throw SupportViolation("right action of U_Q does not preserve n_P at " + to_string(Position{i, b}), {i, b});
          right.updates.push_back({slot(i, b), slot(i, a), c});
        }
      } else {
        // (g lam)_bk -= c lam_ak ; (lam h)_ia -= c lam_ib, projected onto P
        for (int k = b + 1; k <= n; ++k)
          if (slot(b, k) >= 0 && slot(a, k) >= 0) left.updates.push_back({slot(b, k), slot(a, k), p - c});
        for (int i = 1; i < a; ++i)
          if (slot(i, a) >= 0 && slot(i, b) >= 0) right.updates.push_back({slot(i, a), slot(i, b), p - c});
      }
      generators_.push_back(std::move(left));
      generators_.push_back(std::move(right));
    }
  }
}

std::uint64_t OrbitSpace::key(const FqUpperMatrix& m) const {
  if (m.n() != poset_.n() || m.p() != p_) throw std::invalid_argument("matrix does not belong to this orbit space");
  const PositionSet outside = m.support() - poset_.relations();
  if (!outside.empty()) throw SupportViolation("matrix support outside the poset", outside.to_vector().front());
  std::uint64_t k = 0;
  for (int t = 0; t < slots(); ++t) k += place_[t] * static_cast<std::uint64_t>(m.get(positions_[t]));
  return k;
}

FqUpperMatrix OrbitSpace::matrix(std::uint64_t key) const {
  return FqUpperMatrix::from_key(poset_.n(), p_, poset_.relations(), role_, key);
}

void OrbitSpace::decode(std::uint64_t key, std::vector<int>& digits) const {
  digits.resize(positions_.size());
  for (int t = slots() - 1; t >= 0; --t) {
    digits[t] = static_cast<int>(key % static_cast<std::uint64_t>(p_));
    key /= static_cast<std::uint64_t>(p_);
  }
}

std::uint64_t OrbitSpace::apply(std::uint64_t key, const std::vector<int>& digits, const Generator& gen) const {
  for (const auto& u : gen.updates) {
    const int old = digits[u.target];
    const int fresh = (old + u.factor * digits[u.source]) % p_;
    key = key + place_[u.target] * static_cast<std::uint64_t>(fresh) - place_[u.target] * static_cast<std::uint64_t>(old);
  }
  return key;
}

GroupElement OrbitSpace::element(const Generator& gen) const {
  return GroupElement::elementary(poset_.n(), p_, gen.pos, gen.coeff);
}

namespace {

OrbitTable run_orbits(const OrbitSpace& space, Side side, bool record_witnesses, const std::vector<int>& order) {
  OrbitTable table;
  table.side = side;
  const std::uint64_t size = space.size();
  table.orbit_of.assign(size, kUnassigned);
  if (record_witnesses) {
    table.parent.assign(size, 0);
    table.parent_generator.assign(size, -1);
  }
  std::vector<int> active;
  for (int g : order)
    if (space.acts(space.generators()[g], side)) active.push_back(g);

  std::vector<int> digits;
  std::deque<std::uint64_t> queue;
  for (std::uint64_t start = 0; start < size; ++start) {
    if (table.orbit_of[start] != kUnassigned) continue;
    const auto id = static_cast<std::uint32_t>(table.representatives.size());
    table.representatives.push_back(start);
    std::uint64_t count = 1;
    table.orbit_of[start] = id;
    queue.push_back(start);
    while (!queue.empty()) {
      const std::uint64_t cur = queue.front();
      queue.pop_front();
      space.decode(cur, digits);
      for (int g : active) {
        const std::uint64_t next = space.apply(cur, digits, space.generators()[g]);
        if (table.orbit_of[next] != kUnassigned) continue;
        table.orbit_of[next] = id;
        if (record_witnesses) {
          table.parent[next] = cur;
          table.parent_generator[next] = g;
        }
        ++count;
        queue.push_back(next);
      }
    }
    table.sizes.push_back(count);
  }
  return table;
}

std::vector<int> identity_order(const OrbitSpace& space) {
  std::vector<int> order(space.generators().size());
  for (std::size_t g = 0; g < order.size(); ++g) order[g] = static_cast<int>(g);
  return order;
}

// Compose a generator path (first applied first) into g, h.
std::pair<GroupElement, GroupElement> compose_path(const OrbitSpace& space, const std::vector<int>& path) {
  const int n = space.poset().n();
  const int p = space.p();
  const auto full = full_poset(n).relations();
  GroupElement g = GroupElement::identity(n, p, full);
  GroupElement h = GroupElement::identity(n, p, full);
  for (int gen_id : path) {
    const auto& gen = space.generators()[gen_id];
    if (gen.side == Side::kLeft)
      g = mul(space.element(gen), g);
    else
      h = mul(h, space.element(gen));
  }
  return {g, h};
}

}  // namespace

OrbitTable compute_orbits(const OrbitSpace& space, Side side, bool record_witnesses) {
  return run_orbits(space, side, record_witnesses, identity_order(space));
}

OrbitTable compute_orbits_shuffled(const OrbitSpace& space, Side side, std::uint64_t seed) {
  auto order = identity_order(space);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return run_orbits(space, side, false, order);
}

std::vector<std::uint64_t> orbit_keys(const OrbitSpace& space, std::uint64_t key, Side side) {
  std::unordered_set<std::uint64_t> seen{key};
  std::vector<std::uint64_t> out{key};
  std::vector<int> digits;
  for (std::size_t at = 0; at < out.size(); ++at) {
    const std::uint64_t cur = out[at];
    space.decode(cur, digits);
    for (const auto& gen : space.generators()) {
      if (!space.acts(gen, side)) continue;
      const std::uint64_t next = space.apply(cur, digits, gen);
      if (seen.insert(next).second) out.push_back(next);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<GroupElement, GroupElement> orbit_witness(const OrbitSpace& space, const OrbitTable& table,
                                                    std::uint64_t key) {
  if (!table.has_witnesses()) throw std::logic_error("orbit table was computed without witnesses");
  const std::uint64_t root = table.representatives.at(table.orbit_of.at(key));
  std::vector<int> path;
  for (std::uint64_t cur = key; cur != root; cur = table.parent[cur]) path.push_back(table.parent_generator[cur]);
  std::reverse(path.begin(), path.end());
  return compose_path(space, path);
}

std::pair<GroupElement, GroupElement> find_orbit_witness(const OrbitSpace& space, std::uint64_t from,
                                                         std::uint64_t to, Side side) {
  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, int>> parent{{from, {from, -1}}};
  std::deque<std::uint64_t> queue{from};
  std::vector<int> digits;
  while (!queue.empty() && !parent.contains(to)) {
    const std::uint64_t cur = queue.front();
    queue.pop_front();
    space.decode(cur, digits);
    for (std::size_t g = 0; g < space.generators().size(); ++g) {
      const auto& gen = space.generators()[g];
      if (!space.acts(gen, side)) continue;
      const std::uint64_t next = space.apply(cur, digits, gen);
      if (parent.emplace(next, std::pair{cur, static_cast<int>(g)}).second) queue.push_back(next);
    }
  }
  if (!parent.contains(to)) throw std::invalid_argument("elements lie in different orbits");
  std::vector<int> path;
  for (std::uint64_t cur = to; cur != from; cur = parent[cur].first) path.push_back(parent[cur].second);
  std::reverse(path.begin(), path.end());
  return compose_path(space, path);
}

FqUpperMatrix act(Role role, const GroupElement& g, const FqUpperMatrix& m, const GroupElement& h) {
  return role == Role::kPrimal ? act_matrix(g, m, h) : act_dual(g, m, h);
}

}  // namespace patternsc
