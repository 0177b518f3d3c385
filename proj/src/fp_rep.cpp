#include "nonschur/fp_rep.hpp"

#include "nonschur/errors.hpp"

#include <algorithm>
#include <random>

namespace nonschur {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) { return splitmix(h ^ splitmix(v)); }

std::uint64_t mix(std::uint64_t h, const DimVec& v) {
  h = mix(h, v.size());
  for (auto x : v.values()) h = mix(h, static_cast<std::uint64_t>(x));
  return h;
}

void check_prime(std::uint64_t p) {
  if (p >= (1ULL << 32) || !is_prime_u64(p))
    throw DomainError("modulus " + std::to_string(p) + " is not a prime below 2^32");
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t s : {2ULL, 3ULL, 5ULL, 7ULL}) {
    if (n % s == 0) return n == s;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (a % n == 0) continue;
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::size_t rank_mod_p(FpMatrix m, std::uint64_t p) {
  std::size_t rank = 0;
  const std::size_t R = m.rows, C = m.cols;
  for (std::size_t col = 0; col < C && rank < R; ++col) {
    std::size_t piv = rank;
    while (piv < R && m.at(piv, col) == 0) ++piv;
    if (piv == R) continue;
    if (piv != rank)
      std::swap_ranges(m.data.begin() + piv * C, m.data.begin() + (piv + 1) * C,
                       m.data.begin() + rank * C);
    std::uint64_t* prow = &m.data[rank * C];
    const std::uint64_t inv = powmod(prow[col], p - 2, p);
    for (std::size_t j = col; j < C; ++j) prow[j] = prow[j] * inv % p;
    for (std::size_t i = rank + 1; i < R; ++i) {
      std::uint64_t* row = &m.data[i * C];
      const std::uint64_t f = row[col];
      if (f == 0) continue;
      const std::uint64_t nf = p - f;
      for (std::size_t j = col; j < C; ++j) row[j] = (row[j] + nf * prow[j]) % p;
    }
    ++rank;
  }
  return rank;
}

FpRepresentation sample_representation(const Quiver& q, const DimVec& dim, std::uint64_t prime,
                                       std::uint64_t seed) {
  check_prime(prime);
  if (dim.size() != static_cast<std::size_t>(q.num_vertices))
    throw DimensionError("dimension vector " + dim.to_string() + " does not fit the quiver");
  if (!dim.is_nonnegative()) throw DomainError("negative dimension vector " + dim.to_string());
  FpRepresentation rep{q, dim, prime, {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, prime - 1);
  for (const auto& ar : q.arrows) {
    for (int c = 0; c < ar.count; ++c) {
      FpMatrix m(dim[ar.target], dim[ar.source]);
      for (auto& x : m.data) x = dist(rng);
      rep.maps.push_back(std::move(m));
    }
  }
  return rep;
}

// Unknowns are the entries of f_i : M_i -> N_i; each arrow ρ: s -> t contributes
// the block f_t M_ρ - N_ρ f_s = 0.
std::int64_t hom_dim(const FpRepresentation& M, const FpRepresentation& N) {
  if (!(M.quiver == N.quiver)) throw DimensionError("representations of different quivers");
  if (M.prime != N.prime) throw DomainError("representations over different fields");
  const Quiver& q = M.quiver;
  const std::uint64_t p = M.prime;
  const auto& a = M.dim;
  const auto& b = N.dim;

  std::vector<std::size_t> offset(q.num_vertices + 1, 0);
  for (int i = 0; i < q.num_vertices; ++i) offset[i + 1] = offset[i] + a[i] * b[i];
  const std::size_t unknowns = offset.back();
  if (unknowns == 0) return 0;

  std::size_t rows = 0;
  for (const auto& ar : q.arrows) rows += static_cast<std::size_t>(ar.count) * b[ar.target] * a[ar.source];
  FpMatrix sys(rows, unknowns);

  std::size_t row = 0, map_index = 0;
  for (const auto& ar : q.arrows) {
    const int s = ar.source, t = ar.target;
    for (int c = 0; c < ar.count; ++c, ++map_index) {
      const FpMatrix& Mr = M.maps[map_index];  // a_t x a_s
      const FpMatrix& Nr = N.maps[map_index];  // b_t x b_s
      for (std::int64_t i = 0; i < b[t]; ++i) {
        for (std::int64_t j = 0; j < a[s]; ++j, ++row) {
          for (std::int64_t k = 0; k < a[t]; ++k) {
            std::uint64_t& e = sys.at(row, offset[t] + i * a[t] + k);
            e = (e + Mr.at(k, j)) % p;
          }
          for (std::int64_t k = 0; k < b[s]; ++k) {
            std::uint64_t& e = sys.at(row, offset[s] + k * a[s] + j);
            e = (e + p - Nr.at(i, k)) % p;
          }
        }
      }
    }
  }
  return static_cast<std::int64_t>(unknowns - rank_mod_p(std::move(sys), p));
}

std::int64_t generic_hom(const Quiver& q, const DimVec& a, const DimVec& b, const SamplingOptions& opts) {
  if (opts.trials < 1) throw DomainError("trials must be positive");
  check_prime(opts.prime);
  // hom >= max(0, <a,b>) for every pair, so reaching it ends the search early.
  const std::int64_t floor = std::max<std::int64_t>(0, euler_form(q, a, b));
  const std::uint64_t base = mix(mix(opts.seed, a), b);
  std::int64_t best = -1;
  for (int trial = 0; trial < opts.trials; ++trial) {
    const std::uint64_t ts = mix(base, static_cast<std::uint64_t>(trial));
    auto M = sample_representation(q, a, opts.prime, mix(ts, 1));
    auto N = sample_representation(q, b, opts.prime, mix(ts, 2));
    const std::int64_t h = hom_dim(M, N);
    if (best < 0 || h < best) best = h;
    if (best == floor) break;
  }
  return best;
}

std::int64_t generic_ext(const Quiver& q, const DimVec& a, const DimVec& b, const SamplingOptions& opts) {
  const std::int64_t e = generic_hom(q, a, b, opts) - euler_form(q, a, b);
  if (e < 0) throw SamplingError("negative ext estimate for " + a.to_string() + ", " + b.to_string());
  return e;
}

}  // namespace nonschur
