#include "sphunit/symbols.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "sphunit/errors.hpp"

namespace sphunit {

namespace {

int total(const Part& p) { return std::accumulate(p.begin(), p.end(), 0); }

std::string part_str(const Part& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

// Increasing, zero padded in front to length len.
std::vector<int> padded(const Part& p, int len) {
  std::vector<int> v(p.rbegin(), p.rend());
  v.insert(v.begin(), len - static_cast<int>(v.size()), 0);
  return v;
}

bool interleaves(const std::vector<int>& top, const std::vector<int>& bottom) {
  std::vector<int> seq;
  for (size_t i = 0; i < top.size(); ++i) {
    seq.push_back(top[i]);
    if (i < bottom.size()) seq.push_back(bottom[i]);
  }
  return std::is_sorted(seq.begin(), seq.end());
}

int min_pad(const Bipartition& b) {
  const int l = static_cast<int>(b.left.size()), r = static_cast<int>(b.right.size());
  if (b.wtype == GroupType::D) return std::max(l, r);
  return std::max({l - 1, r, 0});
}

void check_type(GroupType g) {
  if (g == GroupType::A) throw DomainError("bad_type", "symbols need type B, C or D");
}

void partitions_of(int n, int maxp, Part& cur, std::vector<Part>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int a = std::min(n, maxp); a >= 1; --a) {
    cur.push_back(a);
    partitions_of(n - a, a, cur, out);
    cur.pop_back();
  }
}

std::vector<Part> partitions_of(int n) {
  std::vector<Part> out;
  Part cur;
  partitions_of(n, n, cur, out);
  return out;
}

Part conjugate(const Part& p) {
  Part out;
  for (int col = 1; !p.empty() && col <= p.front(); ++col)
    out.push_back(static_cast<int>(std::count_if(p.begin(), p.end(), [&](int a) { return a >= col; })));
  return out;
}

int at(const Part& p, size_t i) { return i < p.size() ? p[i] : 0; }

bool contains(const Part& outer, const Part& inner) {
  for (size_t i = 0; i < std::max(outer.size(), inner.size()); ++i)
    if (at(inner, i) > at(outer, i)) return false;
  return true;
}

// mu / inner is a vertical (at most one cell per row) or horizontal (at
// most one per column) strip.
bool is_strip(const Part& mu, const Part& inner, bool vertical) {
  if (!contains(mu, inner)) return false;
  for (size_t i = 0; i < mu.size(); ++i) {
    if (vertical && mu[i] - at(inner, i) > 1) return false;
    if (!vertical && i > 0 && mu[i] > at(inner, i - 1)) return false;
  }
  return true;
}

// Partitions mu with inner within mu within outer, |mu| = |inner| + k.
std::vector<Part> between(const Part& inner, const Part& outer, int k) {
  std::vector<Part> out;
  Part cur;
  std::function<void(size_t, int, int)> rec = [&](size_t i, int left, int cap) {
    if (i == outer.size()) {
      if (left == 0) {
        Part p = cur;
        std::erase(p, 0);
        out.push_back(p);
      }
      return;
    }
    const int lo = at(inner, i);
    for (int v = std::min(outer[i], cap); v >= lo; --v) {
      if (v - lo > left) continue;
      cur.push_back(v);
      rec(i + 1, left - (v - lo), v);
      cur.pop_back();
    }
  };
  rec(0, k, outer.empty() ? 0 : outer.front());
  return out;
}

std::vector<std::string> fill_rows(const Part& shape, const std::vector<std::pair<Part, char>>& layers) {
  std::vector<std::string> rows;
  for (size_t i = 0; i < shape.size(); ++i) {
    std::string s;
    int done = 0;
    for (const auto& [p, ch] : layers) {
      const int upto = at(p, i);
      s.append(std::max(0, upto - done), ch);
      done = std::max(done, upto);
    }
    rows.push_back(s);
  }
  return rows;
}

std::vector<std::string> transpose_grid(const std::vector<std::string>& g) {
  std::vector<std::string> out;
  for (size_t col = 0; !g.empty() && col < g.front().size(); ++col) {
    std::string s;
    for (const auto& row : g)
      if (col < row.size()) s += row[col];
    out.push_back(s);
  }
  return out;
}

std::vector<Labeling> labelings_b(const Bipartition& sigma, const CoherentData& d) {
  const Part& L = sigma.left;
  const Part& R = sigma.right;
  std::vector<Labeling> out;
  if (!contains(L, d.tau) || !contains(R, d.tau)) return out;
  const int cl = total(L) - total(d.tau);
  if (!is_strip(L, d.tau, false)) return out;
  for (const auto& r1 : between(d.tau, R, d.a)) {
    if (!is_strip(r1, d.tau, true)) continue;
    for (const auto& r2 : between(r1, R, d.b)) {
      if (!is_strip(r2, r1, true)) continue;
      if (!is_strip(R, r2, false)) continue;
      if (cl + total(R) - total(r2) != d.t) continue;
      Labeling l;
      l.left = fill_rows(L, {{d.tau, '*'}, {L, 'c'}});
      l.right = fill_rows(R, {{d.tau, '*'}, {r1, 'r'}, {r2, 'R'}, {R, 'c'}});
      out.push_back(l);
    }
  }
  return out;
}

}  // namespace

int Bipartition::rank() const { return total(left) + total(right); }

std::string Bipartition::str() const {
  std::string s = "[" + part_str(left) + "," + part_str(right) + "]";
  if (dlabel) s += to_string(*dlabel);
  return s;
}

std::vector<int> Symbol::entries() const {
  std::vector<int> e = top;
  e.insert(e.end(), bottom.begin(), bottom.end());
  std::sort(e.begin(), e.end());
  return e;
}

std::string Symbol::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < top.size(); ++i) os << (i ? " " : "") << top[i];
  os << " |";
  for (int b : bottom) os << " " << b;
  os << ")";
  return os.str();
}

Symbol symbol_of(const Bipartition& b, int m) {
  check_type(b.wtype);
  m = std::max(m, min_pad(b));
  Symbol s;
  s.wtype = b.wtype;
  const int top_len = b.wtype == GroupType::D ? m : m + 1;
  const auto l = padded(b.left, top_len), r = padded(b.right, m);
  for (int i = 0; i < top_len; ++i) s.top.push_back(l[i] + i);
  for (int j = 0; j < m; ++j) s.bottom.push_back(r[j] + j);
  return s;
}

bool is_special(const Symbol& s) {
  if (interleaves(s.top, s.bottom)) return true;
  return s.wtype == GroupType::D && interleaves(s.bottom, s.top);
}

bool is_special(const Bipartition& b) { return is_special(symbol_of(b)); }

bool same_family(const Bipartition& a, const Bipartition& b) {
  if (a.wtype != b.wtype || a.rank() != b.rank()) throw DomainError("rank_mismatch", "different type or rank");
  if (a.dlabel && b.dlabel && a.dlabel != b.dlabel) return false;
  const int m = std::max(min_pad(a), min_pad(b));
  return symbol_of(a, m).entries() == symbol_of(b, m).entries();
}

OrbitPartition orbit_of_special_symbol(const Symbol& s) {
  check_type(s.wtype);
  if (!is_special(s)) throw DomainError("not_special", "symbol " + s.str() + " is not special");
  std::vector<int> top = s.top, bottom = s.bottom;
  if (s.wtype == GroupType::D && !interleaves(top, bottom)) std::swap(top, bottom);
  // B and D: 2*top+1, 2*bottom. C: 2*top, 2*bottom+1.
  const int ot = s.wtype == GroupType::C ? 0 : 1;
  std::vector<int> x;
  for (int v : top) x.push_back(2 * v + ot);
  for (int v : bottom) x.push_back(2 * v + 1 - ot);
  std::sort(x.begin(), x.end());
  std::vector<int> parts;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] - static_cast<int>(i) > 0) parts.push_back(x[i] - static_cast<int>(i));
  const GroupType tag = s.wtype == GroupType::B ? GroupType::C : s.wtype == GroupType::C ? GroupType::B : GroupType::D;
  OrbitPartition o = make_orbit(tag, parts);
  o.label.reset();
  return o;
}

std::vector<Bipartition> all_bipartitions(GroupType wtype, int n) {
  check_type(wtype);
  std::vector<Bipartition> out;
  for (int k = n; k >= 0; --k)
    for (const auto& l : partitions_of(k))
      for (const auto& r : partitions_of(n - k)) {
        Bipartition b{l, r, wtype, std::nullopt};
        if (wtype == GroupType::D) {
          if (k < n - k || (k == n - k && l < r)) continue;
          if (l == r) {
            b.dlabel = DLabel::I;
            out.push_back(b);
            b.dlabel = DLabel::II;
          }
        }
        out.push_back(b);
      }
  return out;
}

std::vector<Family> families(GroupType wtype, int n) {
  const auto all = all_bipartitions(wtype, n);
  std::vector<Family> out;
  for (const auto& b : all) {
    bool placed = false;
    for (auto& f : out)
      if (same_family(f.members.front(), b)) {
        f.members.push_back(b);
        placed = true;
        break;
      }
    if (!placed) out.push_back(Family{{b}, b, {}});
  }
  for (auto& f : out)
    for (const auto& b : f.members)
      if (is_special(b)) {
        f.special = b;
        f.orbit = orbit_of_special_symbol(symbol_of(b));
        if (b.dlabel && f.orbit.very_even()) f.orbit.label = b.dlabel;
        break;
      }
  return out;
}

std::string Labeling::str() const {
  auto side = [](const std::vector<std::string>& rows) {
    if (rows.empty()) return std::string("0");
    std::string s;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i) s += '/';
      for (char ch : rows[i]) {
        if (ch == 'R') s += "r'";
        else if (ch == 'C') s += "c'";
        else s += ch;
      }
    }
    return s;
  };
  return "(" + side(left) + "," + side(right) + ")";
}

int Labeling::count(char x) const {
  int c = 0;
  for (const auto* side : {&left, &right})
    for (const auto& row : *side) c += static_cast<int>(std::count(row.begin(), row.end(), x));
  return c;
}

std::vector<Labeling> labelings(const Bipartition& sigma, const CoherentData& d) {
  check_type(sigma.wtype);
  if (sigma.wtype == GroupType::D) throw DomainError("unsupported_type", "labelings are implemented for B and C");
  if (d.a < 0 || d.b < 0 || d.t < 0 || 2 * total(d.tau) + d.a + d.b + d.t != sigma.rank())
    throw DomainError("size_mismatch", "need 2|tau| + a + b + t = rank");
  if (sigma.wtype == GroupType::B) return labelings_b(sigma, d);
  // Type C: twist by sign, count in type B, then transpose back and rename
  // r -> c, r' -> c', c -> r.
  Bipartition tw{conjugate(sigma.right), conjugate(sigma.left), GroupType::B, std::nullopt};
  CoherentData dt{conjugate(d.tau), d.a, d.b, d.t};
  std::vector<Labeling> out;
  for (auto l : labelings_b(tw, dt)) {
    Labeling c;
    c.left = transpose_grid(l.right);
    c.right = transpose_grid(l.left);
    for (auto* side : {&c.left, &c.right})
      for (auto& row : *side)
        for (auto& ch : row) ch = ch == 'r' ? 'c' : ch == 'R' ? 'C' : ch == 'c' ? 'r' : ch;
    out.push_back(c);
  }
  return out;
}

int coherent_multiplicity(const Bipartition& sigma, const CoherentData& d) {
  return static_cast<int>(labelings(sigma, d).size());
}

int block_of_labeling(GroupType wtype, int n, const Labeling& l) {
  check_type(wtype);
  if (wtype == GroupType::D) return n + l.count('R') - l.count('r');
  const int r = wtype == GroupType::B ? l.count('r') : l.count('c');
  const int rp = wtype == GroupType::B ? l.count('R') : l.count('C');
  const int eps = rp >= r ? 0 : 1;
  return n + 1 + std::abs(rp - r) - eps;
}

}  // namespace sphunit
