#include "sphunit/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "sphunit/errors.hpp"

namespace sphunit {

std::string to_string(TabKind k) {
  switch (k) {
    case TabKind::u: return "u";
    case TabKind::sp: return "sp";
    case TabKind::so: return "so";
  }
  return "?";
}

TabKind tabkind_from_string(const std::string& s) {
  if (s == "u") return TabKind::u;
  if (s == "sp") return TabKind::sp;
  if (s == "so") return TabKind::so;
  throw DomainError("bad_kind", "tableau kind must be u, sp or so: " + s);
}

namespace {

// Rows of this length must come in +/- pairs.
bool paired(TabKind k, int len) {
  if (k == TabKind::sp) return len % 2 == 1;
  if (k == TabKind::so) return len % 2 == 0;
  return false;
}

bool all_even(const std::vector<Row>& rows) {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.len % 2 == 0; });
}

std::map<int, int, std::greater<>> size_counts(const std::vector<int>& parts) {
  std::map<int, int, std::greater<>> c;
  for (int a : parts)
    if (a > 0) ++c[a];
  return c;
}

}  // namespace

void SignedTableau::canonicalize() {
  std::erase_if(rows, [](const Row& r) { return r.len <= 0; });
  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return a.len != b.len ? a.len > b.len : a.lead > b.lead; });
}

int SignedTableau::size() const {
  int s = 0;
  for (const auto& r : rows) s += r.len;
  return s;
}

std::vector<int> SignedTableau::partition() const {
  std::vector<int> p;
  for (const auto& r : rows) p.push_back(r.len);
  std::sort(p.begin(), p.end());
  return p;
}

std::string SignedTableau::str() const {
  std::string s;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) s += '/';
    int sign = rows[i].lead;
    for (int j = 0; j < rows[i].len; ++j, sign = -sign) s += sign > 0 ? '+' : '-';
  }
  if (label) s += " " + to_string(*label);
  return s;
}

std::pair<int, int> signature_of(const SignedTableau& t) {
  int p = 0, q = 0;
  for (const auto& r : t.rows) {
    const int hi = (r.len + 1) / 2, lo = r.len / 2;
    p += r.lead > 0 ? hi : lo;
    q += r.lead > 0 ? lo : hi;
  }
  return {p, q};
}

bool is_valid(const SignedTableau& t) {
  std::map<int, int> balance;
  for (const auto& r : t.rows) {
    if (r.len <= 0 || (r.lead != 1 && r.lead != -1)) return false;
    if (paired(t.kind, r.len)) balance[r.len] += r.lead;
  }
  for (auto [len, b] : balance)
    if (b != 0) return false;
  if (t.label && !(t.kind == TabKind::so && all_even(t.rows))) return false;
  return true;
}

std::vector<SignedTableau> enumerate_real_forms(TabKind kind, std::vector<int> partition,
                                                std::optional<std::pair<int, int>> signature) {
  const auto counts = size_counts(partition);
  for (auto [a, c] : counts)
    if (paired(kind, a) && c % 2)
      throw DomainError("invalid_partition", "size " + std::to_string(a) + " needs even multiplicity");
  std::vector<std::pair<int, int>> groups(counts.begin(), counts.end());
  std::vector<SignedTableau> out;
  SignedTableau cur;
  cur.kind = kind;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == groups.size()) {
      SignedTableau t = cur;
      t.canonicalize();
      if (signature && signature_of(t) != *signature) return;
      if (kind == TabKind::so && all_even(t.rows)) {
        t.label = DLabel::I;
        out.push_back(t);
        t.label = DLabel::II;
      }
      out.push_back(t);
      return;
    }
    const auto [a, c] = groups[i];
    const int lo = paired(kind, a) ? c / 2 : 0, hi = paired(kind, a) ? c / 2 : c;
    for (int plus = hi; plus >= lo; --plus) {
      const size_t mark = cur.rows.size();
      for (int j = 0; j < c; ++j) cur.rows.push_back({a, j < plus ? 1 : -1});
      rec(i + 1);
      cur.rows.resize(mark);
    }
  };
  rec(0);
  return out;
}

namespace {

// One step of the u(p,q) rule. `plus` +'s go to rows beginning (or ending)
// with -, `minus` -'s to rows beginning (ending) with +; leftovers become
// rows of length one.
void u_step(std::vector<Row>& rows, int plus, int minus, Side side) {
  SignedTableau tmp;
  tmp.rows = rows;
  tmp.canonicalize();
  rows = tmp.rows;
  std::vector<int> before;
  for (const auto& r : rows) before.push_back(side == Side::beginning ? r.lead : r.last());
  std::vector<Row> extra;
  for (int want : {+1, -1}) {
    int left = want > 0 ? plus : minus;
    for (size_t i = 0; i < rows.size() && left > 0; ++i) {
      if (before[i] != -want) continue;
      if (side == Side::beginning) rows[i].lead = want;
      rows[i].len += 1;
      --left;
    }
    for (; left > 0; --left) extra.push_back({1, want});
  }
  rows.insert(rows.end(), extra.begin(), extra.end());
}

}  // namespace

SignedTableau theta_induce(TabKind kind, std::pair<int, int> levi_sig, const SignedTableau& t, Side side) {
  SignedTableau r = t;
  r.kind = kind;
  r.label.reset();
  const auto [p, q] = levi_sig;
  if (kind == TabKind::u) {
    u_step(r.rows, p, q, side);
  } else {
    u_step(r.rows, p, q, Side::beginning);
    if (kind == TabKind::sp)
      u_step(r.rows, q, p, Side::end);
    else
      u_step(r.rows, p, q, Side::end);
  }
  r.canonicalize();
  return r;
}

SignedTableau rho_induce(TabKind kind, int dim_v1, const SignedTableau& t) {
  SignedTableau r = t;
  r.kind = kind;
  r.canonicalize();
  int need = dim_v1;
  // Rows of length zero are available below the tableau.
  std::vector<Row> zeros;
  for (int j = 0; j <= need; ++j) zeros.push_back({0, paired(kind, 0) && j % 2 ? -1 : 1});
  std::vector<Row> rows = r.rows;
  rows.insert(rows.end(), zeros.begin(), zeros.end());
  size_t i = 0;
  while (need > 0 && i < rows.size()) {
    size_t j = i;
    while (j < rows.size() && rows[j].len == rows[i].len) ++j;
    const int a = rows[i].len;
    const int c = static_cast<int>(j - i);
    if (need >= c) {
      for (size_t k = i; k < j; ++k) rows[k].len += 2;
      need -= c;
    } else if (!paired(kind, a)) {
      // + rows come first in canonical order (zeros are all +).
      for (size_t k = i; k < i + need; ++k) rows[k].len += 2;
      need = 0;
    } else {
      std::vector<size_t> pl, mi;
      for (size_t k = i; k < j; ++k) (rows[k].lead > 0 ? pl : mi).push_back(k);
      const int pairs = need / 2;
      for (int k = 0; k < pairs; ++k) {
        rows[pl[k]].len += 2;
        rows[mi[k]].len += 2;
      }
      if (need % 2) {
        rows[pl[pairs]].len += 1;
        rows[mi[pairs]].len += 1;
      }
      need = 0;
    }
    i = j;
  }
  r.rows = rows;
  r.canonicalize();
  const bool keep = kind == TabKind::so && all_even(r.rows) && t.label && dim_v1 % 2 == 0;
  if (!keep) r.label.reset();
  return r;
}

SignedTableau split_form(GroupType g, std::vector<int> partition) {
  if (g == GroupType::A) throw DomainError("bad_type", "split_form needs type B, C or D");
  const TabKind kind = g == GroupType::C ? TabKind::sp : TabKind::so;
  const int total = std::accumulate(partition.begin(), partition.end(), 0);
  if ((total % 2 == 1) != (g == GroupType::B))
    throw DomainError("invalid_partition", std::string("size ") + std::to_string(total) + " does not fit type " + to_char(g));
  const auto counts = size_counts(partition);
  SignedTableau t;
  t.kind = kind;
  const int largest = counts.empty() ? 0 : counts.begin()->first;
  for (auto [a, c] : counts) {
    int plus = c / 2;
    if (c % 2) {
      if (paired(kind, a)) throw DomainError("invalid_partition", "size " + std::to_string(a) + " needs even multiplicity");
      if (!(g == GroupType::B && a == largest))
        throw DomainError("unbalanced", "size " + std::to_string(a) + " has odd multiplicity");
      plus = c / 2 + 1;
    }
    for (int j = 0; j < c; ++j) t.rows.push_back({a, j < plus ? 1 : -1});
  }
  t.canonicalize();
  if (kind == TabKind::so && all_even(t.rows)) t.label = DLabel::I;
  return t;
}

std::vector<int> transpose(const std::vector<int>& parts) {
  std::vector<int> p = parts;
  std::sort(p.begin(), p.end(), std::greater<>());
  std::vector<int> out;
  for (int col = 1; !p.empty() && col <= p.front(); ++col)
    out.push_back(static_cast<int>(std::count_if(p.begin(), p.end(), [&](int a) { return a >= col; })));
  return out;
}

std::vector<int> collapse(TabKind kind, std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  const int bad = kind == TabKind::sp ? 1 : 0;
  for (;;) {
    int q = -1;
    for (auto [a, c] : size_counts(parts))
      if (a % 2 == bad && c % 2 == 1) {
        q = a;
        break;
      }
    if (q < 0) break;
    size_t last = 0;
    for (size_t i = 0; i < parts.size(); ++i)
      if (parts[i] == q) last = i;
    parts[last] -= 1;
    size_t k = last + 1;
    while (k < parts.size() && parts[k] >= q - 1) ++k;
    if (k == parts.size()) parts.push_back(0);
    parts[k] += 1;
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
  }
  return parts;
}

std::vector<int> dual_column_list(const std::vector<int>& sp_parts) {
  std::vector<int> p = sp_parts;
  std::sort(p.begin(), p.end());
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] % 2 || p[i] <= 0 || (i && p[i] == p[i - 1]))
      throw DomainError("not_distinguished", "need distinct even parts");
  std::vector<int> x;
  if (p.size() % 2 == 0) x.push_back(0);
  for (int a : p) x.push_back(a / 2);
  std::vector<int> cols;
  for (int i = static_cast<int>(x.size()) - 1; i >= 0; --i) cols.push_back(2 * x[i] + (i % 2 ? -1 : 1));
  return cols;
}

OrbitPartition dual_columns(const OrbitPartition& sp_orbit) {
  if (sp_orbit.gtype != GroupType::B) throw DomainError("not_distinguished", "need an orbit in sp (tag B)");
  std::vector<int> rows = transpose(dual_column_list(sp_orbit.parts));
  std::sort(rows.begin(), rows.end());
  return make_orbit(GroupType::C, rows);
}

}  // namespace sphunit
