// wtypes.cpp

#include "sphunit/wtypes.hpp"

#include <cstdint>
#include <cstdlib>
#include <map>

#include "sphunit/errors.hpp"

namespace sphunit {

namespace {

using Mask = std::uint32_t;

// m-subsets of {0..n-1} in lexicographic order of their sorted elements.
std::vector<Mask> subsets(int n, int m) {
  std::vector<Mask> out;
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  if (m > n) return out;
  while (true) {
    Mask s = 0;
    for (int i : idx) s |= Mask{1} << i;
    out.push_back(s);
    int i = m - 1;
    while (i >= 0 && idx[i] == n - m + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// Image of a subset under the underlying permutation; sign is the product
// of the signs on the subset.
std::pair<Mask, int> move_subset(const SignedPerm& w, Mask s) {
  Mask t = 0;
  int sign = 1;
  for (int i = 0; i < w.rank(); ++i) {
    if (!(s >> i & 1)) continue;
    t |= Mask{1} << (std::abs(w.img[i]) - 1);
    if (w.img[i] < 0) sign = -sign;
  }
  return {t, sign};
}

std::map<Mask, std::size_t> index_of(const std::vector<Mask>& basis) {
  std::map<Mask, std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = i;
  return idx;
}

Matrix monomial_matrix(const SignedPerm& w, const std::vector<Mask>& basis, bool signed_action) {
  const auto idx = index_of(basis);
  Matrix g(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto [t, sign] = move_subset(w, basis[j]);
    g(idx.at(t), j) = signed_action ? sign : 1;
  }
  return g;
}

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void check_rank(GroupType g, int n) {
  if (n < 1) throw DomainError("bad_rank", "rank must be positive");
  if (g == GroupType::D && n < 2) throw DomainError("bad_rank", "type D needs rank >= 2");
}

// Polytabloid basis of the two-row Specht module, as columns in the
// permutation module on m-subsets.
Matrix polytabloids(int n, int m, const std::vector<Mask>& perm_basis) {
  const auto idx = index_of(perm_basis);
  std::vector<Vec> cols;
  for (Mask bottom : subsets(n, m)) {
    std::vector<int> top, bot;
    for (int i = 0; i < n; ++i) (bottom >> i & 1 ? bot : top).push_back(i);
    bool standard = true;
    for (int l = 0; l < m; ++l)
      if (top[l] > bot[l]) standard = false;
    if (!standard) continue;
    Vec v(perm_basis.size());
    for (Mask choice = 0; choice < (Mask{1} << m); ++choice) {
      Mask t = 0;
      int sign = 1;
      for (int l = 0; l < m; ++l) {
        if (choice >> l & 1) {
          t |= Mask{1} << bot[l];
          sign = -sign;
        } else {
          t |= Mask{1} << top[l];
        }
      }
      v[idx.at(t)] += sign;
    }
    cols.push_back(std::move(v));
  }
  return Matrix::from_rows(cols).transpose();
}

}  // namespace

std::string to_string(WTag t) { return t == WTag::SigmaE ? "sigma_e" : "sigma_o"; }

WTypeModel build_sigma_e(GroupType g, int n, int m) {
  check_rank(g, n);
  if (g == GroupType::A) throw DomainError("bad_type", "sigma_e is defined for B, C, D");
  if (m < 0 || m > n) throw DomainError("bad_degree", "sigma_e degree out of range");
  WTypeModel model;
  model.tag = WTag::SigmaE;
  model.gtype = g;
  model.n = n;
  model.m = m;
  const auto basis = subsets(n, m);
  model.dim = static_cast<int>(basis.size());
  for (int a = 1; a <= num_simple(g, n); ++a)
    model.gens.push_back(monomial_matrix(SignedPerm::simple(g, n, a), basis, true));
  model.gram = Matrix::identity(basis.size());
  return model;
}

WTypeModel build_sigma_o(GroupType g, int n, int m) {
  check_rank(g, n);
  if (m < 0 || 2 * m > n) throw DomainError("bad_degree", "sigma_o degree must satisfy 0 <= 2m <= n");
  WTypeModel model;
  model.tag = WTag::SigmaO;
  model.gtype = g;
  model.n = n;
  model.m = m;
  const auto perm_basis = subsets(n, m);
  const Matrix b = polytabloids(n, m, perm_basis);
  model.dim = static_cast<int>(b.cols());
  if (model.dim != binom(n, m) - binom(n, m - 1))
    throw DomainError("internal", "two-row Specht dimension mismatch");
  const Matrix bt = b.transpose();
  model.gram = bt * b;
  const Matrix left = inverse(model.gram) * bt;
  for (int a = 1; a <= num_simple(g, n); ++a) {
    const Matrix perm = monomial_matrix(SignedPerm::simple(g, n, a), perm_basis, false);
    model.gens.push_back(left * (perm * b));
  }
  return model;
}

std::vector<WTypeModel> relevant_models(GroupType g, int n) {
  std::vector<WTypeModel> out;
  const int top_e = g == GroupType::D ? n / 2 : n;
  for (int m = 0; m <= top_e; ++m) out.push_back(build_sigma_e(g, n, m));
  for (int m = 1; 2 * m <= n; ++m) out.push_back(build_sigma_o(g, n, m));
  return out;
}

Matrix rep_matrix(const WTypeModel& model, const SignedPerm& w) {
  Matrix r = Matrix::identity(model.dim);
  for (int a : reduced_word(model.gtype, w)) r = r * model.gens[a - 1];
  return r;
}

Rational character_sigma_e(const SignedPerm& w, int m) {
  long total = 0;
  for (Mask s : subsets(w.rank(), m)) {
    auto [t, sign] = move_subset(w, s);
    if (t == s) total += sign;
  }
  return Rational(total);
}

Rational character_sigma_o(const SignedPerm& w, int m) {
  auto fixed = [&](int j) {
    long c = 0;
    for (Mask s : subsets(w.rank(), j))
      if (move_subset(w, s).first == s) ++c;
    return c;
  };
  return Rational(fixed(m) - (m > 0 ? fixed(m - 1) : 0));
}

std::string ktype_label(GroupType g, WTag tag, int n, int m) {
  auto mu = [](std::initializer_list<std::pair<const char*, int>> parts, const char* tail) {
    std::string s = "mu(";
    bool first = true;
    for (const auto& [base, e] : parts) {
      if (e <= 0) continue;
      if (!first) s += ",";
      s += std::string(base) + "^" + std::to_string(e);
      first = false;
    }
    return s + tail + ")";
  };
  if (m == 0) return "trivial";
  const int lo = n / 2, hi = (n + 1) / 2;
  switch (g) {
    case GroupType::A:
    case GroupType::C:
      if (tag == WTag::SigmaE) return mu({{"2", m}, {"0", n - m}}, "");
      return mu({{"1", m}, {"0", n - 2 * m}, {"-1", m}}, "");
    case GroupType::B:
      if (tag == WTag::SigmaO) return mu({{"1", m}, {"0", hi - m}}, ";+") + " x " + mu({{"1", m}, {"0", lo - m}}, ";+");
      if (m <= lo) return mu({{"0", hi}}, ";+") + " x " + mu({{"2", m}, {"0", lo - m}}, ";+");
      // large degree: the (k+1, k) form with k = n - m
      return mu({{"1", n - m + 1}, {"0", hi - (n - m) - 1}}, ";+") + " x " +
             mu({{"1", n - m}, {"0", lo - (n - m)}}, ";+");
    case GroupType::D:
      if (tag == WTag::SigmaO) return mu({{"1", m}, {"0", lo - m}}, ";+") + " x " + mu({{"1", m}, {"0", lo - m}}, ";+");
      return mu({{"0", lo}}, ";+") + " x " + mu({{"2", m}, {"0", lo - m}}, ";+");
  }
  return "?";
}

}  // namespace sphunit
