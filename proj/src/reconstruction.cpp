#include "csd/reconstruction.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <thread>
#include <vector>

namespace csd {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Exact Gauss-Jordan inverse; throws if singular.
Matrix inverse(Matrix a) {
  const std::size_t n = a.size();
  Matrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == n) throw std::logic_error("reconstruct_alpha: singular sampling matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= scale;
      inv[col][j] /= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// rows: sample points x0 .. x0 + m - 1; columns: binom(x, 1) .. binom(x, m)
Matrix binomial_matrix(int x0, int m) {
  Matrix a(m, std::vector<Rational>(m));
  for (int r = 0; r < m; ++r)
    for (int i = 0; i < m; ++i) a[r][i] = binomial(Rational(x0 + r), i + 1);
  return a;
}

Rational predicted_v(const AlphaTable& alpha, int c, int b) {
  Rational v = 0;
  for (const auto& [ij, a] : alpha.entries) v += a * binomial(Rational(c), ij.first) * binomial(Rational(b), ij.second);
  return v;
}

}  // namespace

Rational AlphaTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? Rational(0) : it->second;
}

bool AlphaTable::all_nonnegative_integers() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const auto& e) { return is_integer(e.second) && sgn(e.second) >= 0; });
}

ExponentCache::ExponentCache(std::shared_ptr<CacheBackend> backend) : backend_(std::move(backend)) {}

std::shared_ptr<const WallExponentTable> ExponentCache::table(const DiagramParams& p, int min_degree) {
  min_degree = std::max(min_degree, 2);
  {
    std::lock_guard lock(mutex_);
    auto it = tables_.find(p);
    if (it != tables_.end() && it->second->max_degree() >= min_degree) return it->second;
  }
  std::shared_ptr<const WallExponentTable> fresh;
  if (backend_) {
    if (auto stored = backend_->load_table(p, min_degree))
      fresh = std::make_shared<const WallExponentTable>(std::move(*stored));
  }
  if (!fresh) {
    fresh = std::make_shared<const WallExponentTable>(factorize(p, min_degree));
    if (backend_) backend_->store_table(*fresh);
  }
  std::lock_guard lock(mutex_);
  auto& slot = tables_[p];
  if (!slot || slot->max_degree() < fresh->max_degree()) slot = fresh;
  return slot;
}

void ExponentCache::prefetch(std::span<const DiagramParams> params, int min_degree) {
  std::vector<DiagramParams> missing;
  {
    std::lock_guard lock(mutex_);
    for (const auto& p : params) {
      auto it = tables_.find(p);
      if (it == tables_.end() || it->second->max_degree() < min_degree) missing.push_back(p);
    }
  }
  std::sort(missing.begin(), missing.end());
  missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
  const std::size_t workers = std::max(1U, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < missing.size(); start += workers) {
    std::vector<std::future<void>> jobs;
    for (std::size_t i = start; i < std::min(missing.size(), start + workers); ++i)
      jobs.push_back(std::async(std::launch::async, [this, p = missing[i], min_degree] { table(p, min_degree); }));
    for (auto& j : jobs) j.get();
  }
}

const AlphaTable& ExponentCache::alpha(NVec n) {
  {
    std::lock_guard lock(mutex_);
    auto it = alphas_.find(n);
    if (it != alphas_.end()) return *it->second;
  }
  std::optional<AlphaTable> a;
  if (backend_) a = backend_->load_alpha(n);
  if (!a) {
    a = reconstruct_alpha(n, *this);
    if (backend_) backend_->store_alpha(*a);
  }
  std::lock_guard lock(mutex_);
  auto& slot = alphas_[n];
  if (!slot) slot = std::make_unique<AlphaTable>(std::move(*a));
  return *slot;
}

const MultiPolynomial& ExponentCache::symbolic_U(NVec n) {
  {
    std::lock_guard lock(mutex_);
    auto it = polys_.find(n);
    if (it != polys_.end()) return *it->second;
  }
  auto poly = csd::symbolic_U(alpha(n));
  std::lock_guard lock(mutex_);
  auto& slot = polys_[n];
  if (!slot) slot = std::make_unique<MultiPolynomial>(std::move(poly));
  return *slot;
}

Rational sample_u(NVec n, const DiagramParams& p, ExponentCache& cache) {
  if (!n.is_positive()) throw std::invalid_argument("sample_u: n must lie in N+");
  return cache.table(p, n.degree())->u(n);
}

Rational sample_u(NVec n, const DiagramParams& p) {
  if (!n.is_positive()) throw std::invalid_argument("sample_u: n must lie in N+");
  return factorize(p, std::max(2, n.degree())).u(n);
}

AlphaTable reconstruct_alpha(NVec n, ExponentCache& cache, GridOrigin origin) {
  if (n.n1 < 1 || n.n2 < 1) throw std::invalid_argument("reconstruct_alpha: requires n1, n2 >= 1");
  if (origin.c0 < 1 || origin.b0 < 1) throw std::invalid_argument("reconstruct_alpha: grid must avoid b, c = 0");
  const int m1 = n.n1;
  const int m2 = n.n2;
  const Rational k(static_cast<long>(n.content()));

  const std::pair<int, int> checks[] = {{origin.c0 + m1, origin.b0 + m2}, {origin.c0 + m1 + 1, origin.b0}};
  std::vector<DiagramParams> needed;
  for (int r = 0; r < m1; ++r)
    for (int s = 0; s < m2; ++s) needed.emplace_back(origin.b0 + s, origin.c0 + r);
  for (auto [c, b] : checks) needed.emplace_back(b, c);
  cache.prefetch(needed, n.degree());

  // V[r][s] = gcd(n) u_n at c = c0 + r, b = b0 + s
  Matrix v(m1, std::vector<Rational>(m2));
  for (int r = 0; r < m1; ++r)
    for (int s = 0; s < m2; ++s) v[r][s] = k * sample_u(n, DiagramParams(origin.b0 + s, origin.c0 + r), cache);

  // V = Ac alpha Ab^T
  const Matrix ac_inv = inverse(binomial_matrix(origin.c0, m1));
  const Matrix ab_inv = inverse(binomial_matrix(origin.b0, m2));
  Matrix left(m1, std::vector<Rational>(m2, Rational(0)));
  for (int i = 0; i < m1; ++i)
    for (int s = 0; s < m2; ++s)
      for (int r = 0; r < m1; ++r) left[i][s] += ac_inv[i][r] * v[r][s];

  AlphaTable alpha{n, {}};
  for (int i = 0; i < m1; ++i)
    for (int j = 0; j < m2; ++j) {
      Rational a = 0;
      for (int s = 0; s < m2; ++s) a += left[i][s] * ab_inv[j][s];
      if (sgn(a) != 0) alpha.entries.emplace(std::pair{i + 1, j + 1}, a);
    }

  for (auto [c, b] : checks) {
    const Rational expected = k * sample_u(n, DiagramParams(b, c), cache);
    const Rational got = predicted_v(alpha, c, b);
    if (got != expected) {
      std::ostringstream os;
      os << "reconstruct_alpha: n = " << n << " predicts " << to_string(got) << " at (b, c) = (" << b << ", " << c
         << ") but factorization gives " << to_string(expected);
      throw ReconstructionError(os.str());
    }
  }
  return alpha;
}

MultiPolynomial symbolic_U(const AlphaTable& alpha) {
  const auto c = MultiPolynomial::variable(Var::c);
  const auto b = MultiPolynomial::variable(Var::b);
  MultiPolynomial out;
  for (const auto& [ij, a] : alpha.entries) {
    const auto [i, j] = ij;
    MultiPolynomial t(a / (factorial(i) * factorial(j)));
    for (int s = 1; s < i; ++s) t *= c - MultiPolynomial(static_cast<long>(s));
    for (int s = 1; s < j; ++s) t *= b - MultiPolynomial(static_cast<long>(s));
    out += t;
  }
  return out;
}

}  // namespace csd
