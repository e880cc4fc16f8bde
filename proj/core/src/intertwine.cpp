// intertwine.cpp

#include "sphunit/intertwine.hpp"

#include "sphunit/errors.hpp"

namespace sphunit {

Matrix simple_op(const WTypeModel& model, int alpha, const Vec& x, CorootConvention conv) {
  if (alpha < 1 || alpha > static_cast<int>(model.gens.size()))
    throw DomainError("bad_index", "simple root index out of range");
  const Rational t = coroot_pairing(model.gtype, alpha, x, conv);
  if ((Rational(1) + t).is_zero()) throw DomainError("pole", "pole: <x,alpha> = -1");
  const Rational c = (Rational(1) - t) / (Rational(1) + t);
  const Matrix& g = model.gens[alpha - 1];
  const Matrix id = Matrix::identity(model.dim);
  // P+ + c P- = ((1+c) I + (1-c) g) / 2
  return Rational(1, 2) * ((Rational(1) + c) * id + (Rational(1) - c) * g);
}

Matrix word_operator(const WTypeModel& model, const std::vector<int>& word, const Vec& x,
                     CorootConvention conv) {
  Matrix m = Matrix::identity(model.dim);
  Vec y = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    m = simple_op(model, *it, y, conv) * m;
    y = reflect(model.gtype, *it, y);
  }
  return m;
}

namespace {

// Longest element of W as a signed permutation (D odd rank: the last
// coordinate keeps its sign).
SignedPerm longest_element(GroupType g, int n) {
  SignedPerm w = SignedPerm::identity(n);
  if (g == GroupType::A) {
    for (int i = 0; i < n; ++i) w.img[i] = n - i;
    return w;
  }
  for (int i = 0; i < n; ++i) w.img[i] = -(i + 1);
  if (g == GroupType::D && n % 2 == 1) w.img[n - 1] = n;
  return w;
}

std::optional<Rational> ratio(const Vec& a, const Vec& b) {
  std::optional<Rational> r;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i].is_zero()) continue;
    r = a[i] / b[i];
    break;
  }
  if (!r) return std::nullopt;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (a[i] != *r * b[i]) return std::nullopt;
  return r;
}

std::vector<Vec> fixed_space(const WTypeModel& model, const std::vector<int>& letters) {
  if (letters.empty()) {
    std::vector<Vec> all;
    for (int i = 0; i < model.dim; ++i) {
      Vec e(model.dim);
      e[i] = 1;
      all.push_back(e);
    }
    return all;
  }
  Matrix stacked(letters.size() * model.dim, model.dim);
  std::size_t row = 0;
  for (int a : letters) {
    const Matrix& g = model.gens[a - 1];
    for (int i = 0; i < model.dim; ++i, ++row)
      for (int j = 0; j < model.dim; ++j) stacked(row, j) = g(i, j) - (i == j ? Rational(1) : Rational(0));
  }
  return nullspace(stacked);
}

}  // namespace

ReducedWord minimal_word_to_negative(const Parameter& p) {
  if (!is_hermitian(p)) throw DomainError("not_hermitian", "parameter " + to_string(p) + " is not hermitian");
  const Vec x = chamber_dominant(p.gtype, p.coords);
  const int n = p.rank();
  SignedPerm w = shortest_in_coset(p.gtype, longest_element(p.gtype, n), x);
  ReducedWord rw;
  rw.letters = reduced_word(p.gtype, w);
  rw.source = Parameter{p.gtype, x};
  rw.target = Parameter{p.gtype, w.act(x)};
  return rw;
}

Matrix hermitian_matrix(const WTypeModel& model, const Parameter& p, CorootConvention conv) {
  if (model.gtype != p.gtype || model.n != p.rank()) throw DomainError("shape", "model does not match parameter");
  const ReducedWord rw = minimal_word_to_negative(p);
  const Matrix s = model.gram * word_operator(model, rw.letters, rw.source.coords, conv);
  if (!s.is_symmetric()) throw DomainError("asymmetric", "gram * operator is not symmetric");
  return s;
}

SignatureReport form_signature(const WTypeModel& model, const Parameter& p, CorootConvention conv) {
  const Signature sig = signature(hermitian_matrix(model, p, conv));
  return {model.tag, model.n, model.m, model.dim, sig.plus, sig.minus, sig.zero};
}

std::vector<SignatureReport> all_signatures(const Parameter& p, CorootConvention conv) {
  std::vector<SignatureReport> out;
  for (const auto& model : relevant_models(p.gtype, p.rank())) out.push_back(form_signature(model, p, conv));
  return out;
}

int multiplicity_in_quotient(const WTypeModel& model, const Parameter& p) {
  const Vec x = chamber_dominant(p.gtype, p.coords);
  const SignedPerm w = shortest_in_coset(p.gtype, longest_element(p.gtype, p.rank()), x);
  return static_cast<int>(rank(word_operator(model, reduced_word(p.gtype, w), x)));
}

// ---- closed forms -------------------------------------------------------

namespace {

Rational checked_div(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("pole", "closed form has a pole here");
  return a / b;
}

Rational half_int(int k) { return Rational(k - 1, 2); }

Rational sigma_o_product(int k, int n, int m, const Rational& nu, const Rational& e) {
  const Rational h = half_int(k);
  Rational r = 1;
  for (int j = 0; j < m; ++j) {
    r *= checked_div((nu - h) - (Rational(1) - e) + j, (nu + h) - (Rational(-n) - e) - j);
    r *= checked_div((Rational(-n) - e) - (-nu + h) + j, (Rational(1) - e) - (-nu - h) - j);
  }
  return r;
}

Rational sigma_e_product(int k, int n, int m, const Rational& nu, const Rational& off) {
  const Rational h = half_int(k);
  Rational r = 1;
  for (int j = 0; j < m; ++j) r *= checked_div(Rational(n) + off - (-h + nu) - j, Rational(n) + off + (h + nu) - j);
  return r;
}

}  // namespace

Rational scalar_gl(int k, int n, int m, const Rational& nu1, const Rational& nu2) {
  if (m < 0 || m > std::min(k, n)) throw DomainError("bad_degree", "need 0 <= m <= min(k,n)");
  const Rational hk = half_int(k), hn = half_int(n);
  Rational r = 1;
  for (int j = 0; j < m; ++j)
    r *= checked_div((nu1 - hk) - (hn + nu2 + 1) + j, (nu1 + hk) - (-hn + nu2 - 1) - j);
  return r;
}

Rational closed_form_offset(HeckeType h) { return Rational(1) - hecke_epsilon(h); }

Rational scalar_sigma_e(HeckeType h, int k, int n, int m, const Rational& nu) {
  if (m < 0) throw DomainError("bad_degree", "negative degree");
  return sigma_e_product(k, n, m, nu, closed_form_offset(h));
}

Rational scalar_sigma_o(HeckeType h, int k, int n, int m, const Rational& nu) {
  if (m < 0) throw DomainError("bad_degree", "negative degree");
  if (n < 1 && m > 0) throw DomainError("bad_degree", "sigma_o needs n >= 1");
  return sigma_o_product(k, n, m, nu, closed_form_offset(h));
}

Rational scalar_gl_in_D(int k, int m, const Rational& nu) {
  const Rational h = half_int(k);
  Rational r = 1;
  for (int j = 0; j < m; ++j) r *= checked_div(h - nu - j, h + nu - j);
  return r;
}

Rational scalar_sigma_e_as_printed(HeckeType h, int k, int n, int m, const Rational& nu) {
  const Rational off = h == HeckeType::D ? Rational(0) : half();
  return sigma_e_product(k, n, m, nu, off);
}

Rational scalar_sigma_o_as_printed(HeckeType h, int k, int n, int m, const Rational& nu) {
  return sigma_o_product(k, n, m, nu, hecke_epsilon(h));
}

Rational closed_form(GroupType g, WTag tag, int k, int n, int m, const Rational& nu) {
  const HeckeType h = hecke_of(g);
  // In type D, sigma_e(m) and sigma_e(k+n-m) restrict to the same W-type.
  if (g == GroupType::D && tag == WTag::SigmaE && 2 * m > k + n) m = k + n - m;
  if (tag == WTag::SigmaE) return scalar_sigma_e(h, k, n, m, nu);
  return scalar_sigma_o(h, k, n, m, nu);
}

// ---- oracle -------------------------------------------------------------

std::optional<Rational> oracle_scalar(GroupType g, WTag tag, int k, int n, int m, const Rational& nu,
                                      CorootConvention conv) {
  const int total = k + n;
  if (k < 1 || n < 0) throw DomainError("bad_rank", "need k >= 1, n >= 0");
  if (g == GroupType::D && total < 2) return std::nullopt;
  if (g == GroupType::D && tag == WTag::SigmaE && 2 * m > total) m = total - m;  // same W(D)-type
  const WTypeModel model = tag == WTag::SigmaE ? build_sigma_e(g, total, m) : build_sigma_o(g, total, m);

  const Rational eps = hecke_epsilon(hecke_of(g));
  Vec chi;
  for (int i = 0; i < k; ++i) chi.push_back(-half_int(k) + nu + i);
  for (int j = 0; j < n; ++j) chi.push_back(Rational(-n + j) + eps);

  // W(M) letters.
  std::vector<int> letters;
  for (int a = 1; a < k; ++a) letters.push_back(a);
  for (int a = k + 1; a < total; ++a) letters.push_back(a);
  if (n >= 1 && g != GroupType::D) letters.push_back(total);
  if (n >= 2 && g == GroupType::D) letters.push_back(total);

  const auto fixed = fixed_space(model, letters);
  if (fixed.size() != 1) return std::nullopt;
  const Vec& v = fixed[0];

  // w_l: reverse and negate the GL block; in type D fix the parity with
  // the zero coordinate of the trivial string, or the last GL entry.
  SignedPerm w = SignedPerm::identity(total);
  for (int i = 0; i < k; ++i) w.img[i] = -(k - i);
  if (g == GroupType::D && k % 2 == 1) {
    const int flip = n >= 1 ? total - 1 : 0;  // coordinate whose image gets its sign back
    w.img[flip] = -w.img[flip];
  }

  Matrix op;
  try {
    op = word_operator(model, reduced_word(g, w), chi, conv);
  } catch (const DomainError& e) {
    if (e.code() == "pole") return std::nullopt;
    throw;
  }
  const Vec image = op.apply(v);
  if (g == GroupType::D && n == 0 && k % 2 == 1) {
    // Target Levi is GL(k)'; its fixed line is the image of v under the
    // sign change of the last coordinate (an outer automorphism of D).
    SignedPerm f = SignedPerm::identity(total);
    f.img[total - 1] = -total;
    const WTypeModel ambient = tag == WTag::SigmaE ? build_sigma_e(GroupType::B, total, m)
                                                   : build_sigma_o(GroupType::B, total, m);
    return ratio(image, rep_matrix(ambient, f).apply(v));
  }
  return ratio(image, v);
}

std::optional<Rational> oracle_scalar_gl(int k, int n, int m, const Rational& nu1, const Rational& nu2) {
  const int total = k + n;
  if (total < 2) return std::nullopt;
  const WTypeModel model = build_sigma_o(GroupType::A, total, m);
  Vec chi;
  for (int i = 0; i < k; ++i) chi.push_back(-half_int(k) + nu1 + i);
  for (int j = 0; j < n; ++j) chi.push_back(-half_int(n) + nu2 + j);
  std::vector<int> letters;
  for (int a = 1; a < k; ++a) letters.push_back(a);
  for (int a = k + 1; a < total; ++a) letters.push_back(a);
  const auto fixed = fixed_space(model, letters);
  if (fixed.size() != 1) return std::nullopt;
  SignedPerm w = SignedPerm::identity(total);
  for (int i = 0; i < k; ++i) w.img[i] = i + n + 1;
  for (int j = 0; j < n; ++j) w.img[k + j] = j + 1;
  Matrix op;
  try {
    op = word_operator(model, reduced_word(GroupType::A, w), chi);
  } catch (const DomainError& e) {
    if (e.code() == "pole") return std::nullopt;
    throw;
  }
  return ratio(op.apply(fixed[0]), rep_matrix(model, w).apply(fixed[0]));
}

bool oracle_compare(GroupType g, WTag tag, int k, int n, int m, const Rational& nu) {
  const auto value = oracle_scalar(g, tag, k, n, m, nu);
  if (!value) throw DomainError("pole", "oracle undefined at this point");
  return *value == closed_form(g, tag, k, n, m, nu);
}

std::vector<OracleCase> oracle_sweep(GroupType g, int max_total, int max_m, const Vec& nus) {
  std::vector<OracleCase> out;
  for (int total = 1; total <= max_total; ++total)
    for (int k = 1; k <= total; ++k) {
      const int n = total - k;
      for (WTag tag : {WTag::SigmaE, WTag::SigmaO})
        for (int m = tag == WTag::SigmaE ? 0 : 1; m <= max_m; ++m) {
          if (tag == WTag::SigmaE && m > total) continue;
          if (tag == WTag::SigmaO && (2 * m > total || n < 1)) continue;
          for (const auto& nu : nus) {
            OracleCase c{g, tag, k, n, m, nu, {}, {}};
            try {
              const auto v = oracle_scalar(g, tag, k, n, m, nu);
              if (!v) continue;
              c.oracle = *v;
              c.closed = closed_form(g, tag, k, n, m, nu);
            } catch (const DomainError& e) {
              if (e.code() == "pole" || e.code() == "division_by_zero") continue;
              throw;
            }
            out.push_back(std::move(c));
          }
        }
    }
  return out;
}

Vec sixth_grid(int count) {
  Vec v;
  for (int i = 1; i <= count; ++i) v.push_back(Rational(i, 6));
  return v;
}

}  // namespace sphunit
