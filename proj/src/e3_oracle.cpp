#include "hodge/e3_oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace hodge {

namespace {

// Vectors of F_2^n are bitmasks; a subspace is the bitmap of its 2^dim elements.
using Vec = std::uint32_t;
using Bitmap = std::uint64_t;

struct BitModule {
  int n = 0;
  std::vector<Vec> t_img;        // T(e_i)
  std::vector<int> block_start;  // index of b_0 in each block
  std::vector<int> block_size;

  Vec apply(Vec v) const {
    Vec out = 0;
    for (int i = 0; i < n; ++i)
      if (v >> i & 1U) out ^= t_img[static_cast<std::size_t>(i)];
    return out;
  }
  Vec apply_power(Vec v, int k) const {
    for (int i = 0; i < k; ++i) v = apply(v);
    return v;
  }
};

BitModule make_module(const std::array<int, 3>& delta) {
  BitModule m;
  for (int j = 0; j < delta[0]; ++j) {
    int a = 0;
    while (a < 3 && delta[static_cast<std::size_t>(a)] > j) ++a;
    m.block_start.push_back(m.n);
    m.block_size.push_back(a);
    for (int k = 0; k < a; ++k) m.t_img.push_back(k == 0 ? 0U : Vec{1} << (m.n + k - 1));
    m.n += a;
  }
  return m;
}

int bitmap_dim(Bitmap s) { return std::countr_zero(static_cast<unsigned>(std::popcount(s))); }

Bitmap span_of(const std::vector<Vec>& gens) {
  Bitmap s = 1;  // {0}
  for (Vec v : gens) {
    if (s >> v & 1U) continue;
    Bitmap shifted = 0;
    for (Bitmap rest = s; rest; rest &= rest - 1) shifted |= Bitmap{1} << (static_cast<unsigned>(std::countr_zero(rest)) ^ v);
    s |= shifted;
  }
  return s;
}

std::vector<Vec> basis_of(Bitmap s) {
  std::vector<Vec> out;
  Bitmap seen = 1;
  for (Bitmap rest = s; rest; rest &= rest - 1) {
    const auto v = static_cast<Vec>(std::countr_zero(rest));
    if (seen >> v & 1U) continue;
    out.push_back(v);
    seen = span_of(out);
  }
  return out;
}

Bitmap image_of(const BitModule& m, Bitmap s) {
  std::vector<Vec> gens;
  for (Vec v : basis_of(s)) gens.push_back(m.apply(v));
  return span_of(gens);
}

bool contains(Bitmap big, Bitmap small) { return (small & ~big) == 0; }

Bitmap kernel_of_power(const BitModule& m, int k) {
  Bitmap s = 0;
  for (Vec v = 0; v < (Vec{1} << m.n); ++v)
    if (m.apply_power(v, k) == 0) s |= Bitmap{1} << v;
  return s;
}

std::vector<Bitmap> all_subspaces(int n, int d) {
  std::vector<Bitmap> layer{1};
  for (int step = 0; step < d; ++step) {
    std::vector<Bitmap> next;
    for (Bitmap s : layer) {
      auto gens = basis_of(s);
      gens.push_back(0);
      for (Vec v = 1; v < (Vec{1} << n); ++v) {
        if (s >> v & 1U) continue;
        gens.back() = v;
        next.push_back(span_of(gens));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    layer = std::move(next);
  }
  return layer;
}

int rank_of(std::array<Vec, kOracleMaxDim> rows, int n) {
  int r = 0;
  for (int bit = 0; bit < n; ++bit) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (rows[static_cast<std::size_t>(i)] >> bit & 1U) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(piv)]);
    for (int i = 0; i < n; ++i)
      if (i != r && (rows[static_cast<std::size_t>(i)] >> bit & 1U)) rows[static_cast<std::size_t>(i)] ^= rows[static_cast<std::size_t>(r)];
    ++r;
  }
  return r;
}

Vec apply_packed(std::uint32_t g, int n, Vec v) {
  Vec out = 0;
  for (int i = 0; i < n; ++i)
    if (v >> i & 1U) out ^= (g >> (kOracleMaxDim * i)) & 0x1FU;
  return out;
}

// Aut(M): a block generator b_{a-1} may go to any v with T^a v = 0; the rest
// of the block follows by T-linearity.
std::vector<std::uint32_t> enumerate_automorphisms(const BitModule& m) {
  const std::size_t blocks = m.block_size.size();
  std::vector<std::vector<Vec>> allowed(blocks);
  for (std::size_t j = 0; j < blocks; ++j)
    for (Vec v = 0; v < (Vec{1} << m.n); ++v)
      if (m.apply_power(v, m.block_size[j]) == 0) allowed[j].push_back(v);

  std::vector<std::uint32_t> out;
  std::vector<std::size_t> digit(blocks, 0);
  while (true) {
    std::array<Vec, kOracleMaxDim> img{};
    for (std::size_t j = 0; j < blocks; ++j) {
      Vec v = allowed[j][digit[j]];
      const int top = m.block_start[j] + m.block_size[j] - 1;
      for (int s = 0; s < m.block_size[j]; ++s) {
        img[static_cast<std::size_t>(top - s)] = v;
        v = m.apply(v);
      }
    }
    if (rank_of(img, m.n) == m.n) {
      std::uint32_t packed = 0;
      for (int i = 0; i < m.n; ++i) packed |= img[static_cast<std::size_t>(i)] << (kOracleMaxDim * i);
      out.push_back(packed);
    }
    std::size_t j = 0;
    while (j < blocks && ++digit[j] == allowed[j].size()) digit[j++] = 0;
    if (j == blocks) break;
  }
  return out;
}

const std::vector<std::uint32_t>& automorphisms_cached(const std::array<int, 3>& delta, const BitModule& m) {
  static std::mutex mutex;
  static std::map<std::array<int, 3>, std::vector<std::uint32_t>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(delta);
  if (it == cache.end()) it = cache.emplace(delta, enumerate_automorphisms(m)).first;
  return it->second;
}

Bitmap apply_to_subspace(std::uint32_t g, int n, const std::vector<Vec>& basis) {
  std::vector<Vec> imgs;
  imgs.reserve(basis.size());
  for (Vec v : basis) imgs.push_back(apply_packed(g, n, v));
  return span_of(imgs);
}

std::uint64_t flag_key(Bitmap m1, Bitmap m2) { return m1 << 32 | m2; }

Subspace to_subspace(const PrimeField& f, int n, Bitmap s) {
  std::vector<Vector> rows;
  for (Vec v : basis_of(s)) {
    Vector row(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) row[static_cast<std::size_t>(i)] = v >> i & 1U;
    rows.push_back(std::move(row));
  }
  return Subspace::span(f, static_cast<std::size_t>(n), rows);
}

}  // namespace

std::vector<IsoClass> iso_classes_for_delta(int h, const std::array<int, 3>& delta, const std::array<int, 3>& mu) {
  const int n = mu[0] + mu[1] + mu[2];
  if (n > kOracleMaxDim) throw std::invalid_argument("iso_classes_oracle: total dimension above " + std::to_string(kOracleMaxDim));
  if (delta[0] + delta[1] + delta[2] != n) throw std::invalid_argument("iso_classes_oracle: |δ| differs from |μ|");
  if (!(delta[0] >= delta[1] && delta[1] >= delta[2] && delta[2] >= 0)) {
    throw std::invalid_argument("iso_classes_oracle: δ must be non-increasing and non-negative");
  }
  const BitModule m = make_module(delta);
  const Bitmap full = n == kOracleMaxDim ? Bitmap{0xFFFFFFFFULL} : (Bitmap{1} << (Vec{1} << n)) - 1;
  const Bitmap ker_t = kernel_of_power(m, 1);
  const Bitmap tm = image_of(m, full);

  std::vector<std::pair<Bitmap, Bitmap>> flags;
  const auto m1_candidates = all_subspaces(n, mu[0]);
  for (Bitmap m2 : all_subspaces(n, mu[0] + mu[1])) {
    if (!contains(m2, tm)) continue;
    const Bitmap tm2 = image_of(m, m2);
    for (Bitmap m1 : m1_candidates)
      if (contains(ker_t, m1) && contains(m1, tm2) && contains(m2, m1)) flags.emplace_back(m1, m2);
  }
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < flags.size(); ++i) index.emplace(flag_key(flags[i].first, flags[i].second), i);

  const auto& group = automorphisms_cached(delta, m);
  std::vector<bool> seen(flags.size(), false);
  std::size_t seen_count = 0;
  std::vector<IsoClass> out;
  const PrimeField f2(2);
  Matrix t(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r)
      if (m.t_img[static_cast<std::size_t>(c)] >> r & 1U) t(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = 1;
  const ConcreteModule module(f2, 3, t);

  const Bitmap ker_t2 = kernel_of_power(m, 2);
  for (std::size_t start = 0; start < flags.size(); ++start) {
    if (seen[start]) continue;
    const auto [m1, m2] = flags[start];
    const auto b1 = basis_of(m1);
    const auto b2 = basis_of(m2);
    std::uint64_t orbit = 0;
    for (std::uint32_t g : group) {
      if (seen_count == flags.size()) break;
      const auto it = index.find(flag_key(apply_to_subspace(g, n, b1), apply_to_subspace(g, n, b2)));
      if (it == index.end()) throw std::logic_error("iso_classes_oracle: automorphism leaves the flag set");
      if (!seen[it->second]) {
        seen[it->second] = true;
        ++seen_count;
        ++orbit;
      }
    }

    Bitmap pre_m1 = 0;
    for (Vec v = 0; v < (Vec{1} << n); ++v)
      if (m1 >> m.apply(v) & 1U) pre_m1 |= Bitmap{1} << v;
    const int k1 = bitmap_dim(ker_t);
    const int k2 = bitmap_dim(ker_t2);
    const int a1 = bitmap_dim(m2 & ker_t);
    const int b1dim = bitmap_dim(pre_m1) - mu[0];
    StrataPoint label{h, mu, {k1, k2 - k1, n - k2}, {a1, mu[0] + mu[1] - a1}, {b1dim, n - mu[0] - b1dim}};
    PRDatum rep{module, {module.zero(), to_subspace(f2, n, m1), to_subspace(f2, n, m2), module.whole()}};
    out.push_back(IsoClass{label, std::move(rep), orbit});
  }
  return out;
}

std::vector<IsoClass> iso_classes_oracle(int h, const std::array<int, 3>& mu) {
  if (!(mu[0] >= mu[1] && mu[1] >= mu[2] && mu[2] >= 0 && mu[0] <= h)) {
    throw std::invalid_argument("iso_classes_oracle: μ must be sorted with entries in [0,h]");
  }
  const int n = mu[0] + mu[1] + mu[2];
  std::vector<IsoClass> out;
  for (int x1 = 0; x1 <= std::min(h, n); ++x1)
    for (int x2 = 0; x2 <= x1; ++x2) {
      const int x3 = n - x1 - x2;
      if (x3 < 0 || x3 > x2) continue;
      for (auto& c : iso_classes_for_delta(h, {x1, x2, x3}, mu)) out.push_back(std::move(c));
    }
  std::stable_sort(out.begin(), out.end(), [](const IsoClass& a, const IsoClass& b) { return a.label < b.label; });
  return out;
}

}  // namespace hodge
