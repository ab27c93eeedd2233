#include "qstar/cgc.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace qstar {

namespace {

void check_spin(HalfInt j, HalfInt m, const char* which) {
  if (j.twice() < 0 || !(j - m).is_integer())
    throw Error(ErrorKind::InvalidQuery,
                std::string("malformed label pair for ") + which + ": j=" + j.str() + ", m=" + m.str());
}

// Integer arguments of the Racah sum for a given z.
struct RacahArgs {
  int a, b, c, d, e, f;  // z, j1+j2-j-z, j1-m1-z, j2+m2-z, j-j2+m1+z, j-j1-m2+z
  bool valid() const { return a >= 0 && b >= 0 && c >= 0 && d >= 0 && e >= 0 && f >= 0; }
};

RacahArgs racah_args(const CGQuery& q, int z) {
  return {z,
          (q.j1 + q.j2 - q.j).as_int() - z,
          (q.j1 - q.m1).as_int() - z,
          (q.j2 + q.m2).as_int() - z,
          (q.j - q.j2 + q.m1).as_int() + z,
          (q.j - q.j1 - q.m2).as_int() + z};
}

int z_max(const CGQuery& q) { return (q.j1 + q.j2 - q.j).as_int(); }

}  // namespace

bool cg_allowed(const CGQuery& q) {
  check_spin(q.j1, q.m1, "j1");
  check_spin(q.j2, q.m2, "j2");
  check_spin(q.j, q.m, "j");
  for (auto [j, m] : {std::pair{q.j1, q.m1}, std::pair{q.j2, q.m2}, std::pair{q.j, q.m}})
    if (std::abs(m.twice()) > j.twice()) return false;
  if (q.m1 + q.m2 != q.m) return false;
  if (!(q.j1 + q.j2 - q.j).is_integer()) return false;
  const int t1 = q.j1.twice(), t2 = q.j2.twice(), t = q.j.twice();
  return std::abs(t1 - t2) <= t && t <= t1 + t2;
}

double cg(const CGQuery& q) {
  if (!cg_allowed(q)) return 0.0;
  if (q.j1.twice() == 0 || q.j2.twice() == 0) return 1.0;
  const int j1pj2mj = (q.j1 + q.j2 - q.j).as_int();
  const double delta = factorial(j1pj2mj) * factorial((q.j1 - q.j2 + q.j).as_int()) *
                       factorial((q.j2 - q.j1 + q.j).as_int()) /
                       factorial((q.j1 + q.j2 + q.j).as_int() + 1);
  const double norm = (q.j.twice() + 1) * factorial((q.j1 + q.m1).as_int()) *
                      factorial((q.j1 - q.m1).as_int()) * factorial((q.j2 + q.m2).as_int()) *
                      factorial((q.j2 - q.m2).as_int()) * factorial((q.j + q.m).as_int()) *
                      factorial((q.j - q.m).as_int());
  double sum = 0.0;
  for (int z = 0; z <= z_max(q); ++z) {
    const auto r = racah_args(q, z);
    if (!r.valid()) continue;
    const double den = factorial(r.a) * factorial(r.b) * factorial(r.c) * factorial(r.d) *
                       factorial(r.e) * factorial(r.f);
    sum += (z % 2 ? -1.0 : 1.0) / den;
  }
  return std::sqrt(delta * norm) * sum;
}

HSeries qcg(const CGQuery& q, int order) {
  if (!cg_allowed(q)) return HSeries(order);
  if (q.j1.twice() == 0 || q.j2.twice() == 0) return HSeries::constant(1.0, order);
  const double j1 = q.j1.value(), j2 = q.j2.value(), j = q.j.value();
  const double m1 = q.m1.value(), m2 = q.m2.value();

  HSeries radicand = q_factorial((q.j1 + q.j2 - q.j).as_int(), order) *
                     q_factorial((q.j1 - q.j2 + q.j).as_int(), order) *
                     q_factorial((q.j2 - q.j1 + q.j).as_int(), order) *
                     q_integer(q.j.twice() + 1, order) *
                     q_factorial((q.j1 + q.m1).as_int(), order) *
                     q_factorial((q.j1 - q.m1).as_int(), order) *
                     q_factorial((q.j2 + q.m2).as_int(), order) *
                     q_factorial((q.j2 - q.m2).as_int(), order) *
                     q_factorial((q.j + q.m).as_int(), order) *
                     q_factorial((q.j - q.m).as_int(), order) *
                     invert(q_factorial((q.j1 + q.j2 + q.j).as_int() + 1, order));

  HSeries sum(order);
  for (int z = 0; z <= z_max(q); ++z) {
    const auto r = racah_args(q, z);
    if (!r.valid()) continue;
    const HSeries den = q_factorial(r.a, order) * q_factorial(r.b, order) * q_factorial(r.c, order) *
                        q_factorial(r.d, order) * q_factorial(r.e, order) * q_factorial(r.f, order);
    HSeries term = q_power(-z * (j1 + j2 + j + 1), order) * invert(den);
    if (z % 2) term = -term;
    sum += term;
  }
  const double phase_exp = 0.5 * (j1 + j2 - j) * (j1 + j2 + j + 1) + j1 * m2 - j2 * m1;
  return q_power(phase_exp, order) * sqrt(radicand) * sum;
}

std::vector<HalfInt> coupled_spins(HalfInt j1, HalfInt j2) {
  std::vector<HalfInt> out;
  for (int t = std::abs(j1.twice() - j2.twice()); t <= j1.twice() + j2.twice(); t += 2)
    out.push_back(HalfInt::from_twice(t));
  return out;
}

Eigen::Index CouplingMatrix::block_offset(HalfInt j) const {
  Eigen::Index off = 0;
  for (HalfInt s : coupled_spins(j1, j2)) {
    if (s == j) return off;
    off += dim(s);
  }
  throw Error(ErrorKind::InvalidQuery, "spin " + j.str() + " does not occur in " + j1.str() +
                                           " (x) " + j2.str());
}

namespace {

CouplingMatrix build_cg_matrix(HalfInt j1, HalfInt j2, bool deformed, int order) {
  CouplingMatrix out{j1, j2, {}, {}};
  for (HalfInt j : coupled_spins(j1, j2))
    for (HalfInt m : weights(j)) out.columns.emplace_back(j, m);
  const Eigen::Index n = dim(j1) * dim(j2);
  out.matrix = SeriesMatrix(n, n, order);
  const auto w1 = weights(j1), w2 = weights(j2);
  for (std::size_t a = 0; a < w1.size(); ++a)
    for (std::size_t b = 0; b < w2.size(); ++b) {
      const auto row = static_cast<Eigen::Index>(a * w2.size() + b);
      for (std::size_t c = 0; c < out.columns.size(); ++c) {
        const auto [j, m] = out.columns[c];
        if (w1[a] + w2[b] != m) continue;
        const CGQuery query{j1, j2, j, w1[a], w2[b], m};
        if (deformed)
          out.matrix.set_entry(row, static_cast<Eigen::Index>(c), qcg(query, order));
        else
          out.matrix.slice(0)(row, static_cast<Eigen::Index>(c)) = cg(query);
      }
    }
  return out;
}

}  // namespace

CouplingMatrix cg_matrix(HalfInt j1, HalfInt j2, bool deformed, int order) {
  if (j1.twice() < 0 || j2.twice() < 0) throw Error(ErrorKind::InvalidQuery, "negative spin");
  using Key = std::tuple<int, int, bool, int>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const CouplingMatrix>> cache;
  const Key key{j1.twice(), j2.twice(), deformed, order};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  auto built = std::make_shared<const CouplingMatrix>(build_cg_matrix(j1, j2, deformed, order));
  std::lock_guard lock(mutex);
  return *cache.try_emplace(key, std::move(built)).first->second;
}

SeriesMatrix coupled_block_rep(HalfInt j1, HalfInt j2, Generator g, bool deformed, int order) {
  std::vector<SeriesMatrix> blocks;
  for (HalfInt j : coupled_spins(j1, j2)) blocks.push_back(irrep_generator(j, g, deformed, order).matrix);
  return direct_sum(blocks);
}

}  // namespace qstar
