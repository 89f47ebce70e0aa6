#include "tautilt/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace tautilt {

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

int Quiver::arrow_index(std::string_view name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return static_cast<int>(i);
  return -1;
}

// ---------------------------------------------------------------- parser

namespace {

struct Cursor {
  std::string_view s;
  int line;
  std::size_t pos = 0;
  int col() const { return static_cast<int>(pos) + 1; }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  void expect(char c) {
    if (!peek(c)) throw ParseError(line, col(), std::string("expected '") + c + "'");
    ++pos;
  }
  bool ident_start() {
    skip_ws();
    return pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_');
  }
  std::string ident() {
    if (!ident_start()) throw ParseError(line, col(), "expected a name");
    const std::size_t b = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return std::string(s.substr(b, pos - b));
  }
  bool number_start() {
    skip_ws();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }
  std::string number() {
    if (!number_start()) throw ParseError(line, col(), "expected a number");
    const std::size_t b = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
      ++pos;
    return std::string(s.substr(b, pos - b));
  }
};

const std::set<std::string, std::less<>> kKeywords{"name", "vertices", "arrows", "relations"};

struct RawTerm {
  Scalar coeff;
  std::vector<std::string> names;  // as written, right-to-left composition
  int line, column;
};

std::vector<RawTerm> parse_expr(Cursor& c) {
  std::vector<RawTerm> terms;
  bool first = true;
  while (true) {
    Scalar sign = 1;
    if (c.peek('+')) {
      ++c.pos;
    } else if (c.peek('-')) {
      ++c.pos;
      sign = -1;
    } else if (!first) {
      break;
    }
    first = false;
    RawTerm t;
    t.line = c.line;
    t.column = c.col();
    t.coeff = sign;
    if (c.number_start()) {
      t.coeff = sign * Scalar::parse(c.number());
      if (c.peek('*')) ++c.pos;
    }
    t.names.push_back(c.ident());
    while (c.peek('*')) {
      ++c.pos;
      t.names.push_back(c.ident());
    }
    terms.push_back(std::move(t));
  }
  return terms;
}

}  // namespace

AlgebraSpec parse_algebra(std::string_view text) {
  AlgebraSpec spec;
  spec.name = "algebra";
  enum class Section { None, Arrows, Relations } section = Section::None;
  bool have_vertices = false;
  std::vector<std::vector<RawTerm>> raw_rels;

  std::istringstream in{std::string(text)};
  std::string full;
  int line_no = 0;
  while (std::getline(in, full)) {
    ++line_no;
    std::string_view line = full;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    Cursor c{line, line_no};
    if (c.done()) continue;

    // Keyword lines.
    std::size_t save = c.pos;
    if (c.ident_start()) {
      const std::string word = c.ident();
      if (kKeywords.contains(word) && c.peek(':')) {
        c.expect(':');
        if (word == "name") {
          spec.name = c.ident();
          section = Section::None;
        } else if (word == "vertices") {
          const int col = c.col();
          spec.quiver.vertices = std::stoi(c.number());
          if (spec.quiver.vertices <= 0) throw ParseError(line_no, col, "vertex count must be positive");
          have_vertices = true;
          section = Section::None;
        } else if (word == "arrows") {
          section = Section::Arrows;
        } else {
          section = Section::Relations;
        }
        if (c.done()) continue;
        save = c.pos;
      } else {
        c.pos = save;
      }
    }

    if (section == Section::Arrows) {
      while (!c.done()) {
        const int col = c.col();
        Arrow a;
        a.name = c.ident();
        if (kKeywords.contains(a.name)) throw ParseError(line_no, col, "reserved arrow name " + a.name);
        if (spec.quiver.arrow_index(a.name) >= 0)
          throw ParseError(line_no, col, "duplicate arrow " + a.name);
        c.expect(':');
        const int scol = c.col();
        a.source = std::stoi(c.number()) - 1;
        c.expect('-');
        c.expect('>');
        const int tcol = c.col();
        a.target = std::stoi(c.number()) - 1;
        if (!have_vertices) throw ParseError(line_no, col, "arrows given before vertices");
        if (a.source < 0 || a.source >= spec.quiver.vertices)
          throw ParseError(line_no, scol, "vertex out of range");
        if (a.target < 0 || a.target >= spec.quiver.vertices)
          throw ParseError(line_no, tcol, "vertex out of range");
        spec.quiver.arrows.push_back(std::move(a));
        if (c.peek(',')) ++c.pos;
      }
    } else if (section == Section::Relations) {
      while (!c.done()) {
        raw_rels.push_back(parse_expr(c));
        if (c.peek(',')) {
          ++c.pos;
        } else if (!c.done()) {
          throw ParseError(line_no, c.col(), "expected ',' between relations");
        }
      }
    } else {
      throw ParseError(line_no, c.col(), "unexpected text outside a section");
    }
  }
  if (!have_vertices) throw ParseError(line_no, 1, "missing 'vertices:'");

  const Quiver& q = spec.quiver;
  for (const auto& raw : raw_rels) {
    Relation rel;
    int rs = -1, rt = -1;
    for (const auto& t : raw) {
      Path p;
      for (auto it = t.names.rbegin(); it != t.names.rend(); ++it) {
        const int a = q.arrow_index(*it);
        if (a < 0) throw ParseError(t.line, t.column, "unknown arrow " + *it);
        if (!p.empty() && q.arrows[p.back()].target != q.arrows[a].source)
          throw ParseError(t.line, t.column, "arrows do not compose: " + *it);
        p.push_back(a);
      }
      if (p.size() < 2)
        throw ParseError(t.line, t.column, "relation terms must have length >= 2 (admissible ideal)");
      const int s = q.arrows[p.front()].source, tg = q.arrows[p.back()].target;
      if (rs < 0) {
        rs = s;
        rt = tg;
      } else if (rs != s || rt != tg) {
        throw ParseError(t.line, t.column, "relation combines non-parallel paths");
      }
      rel.terms.emplace_back(t.coeff, std::move(p));
    }
    spec.relations.push_back(std::move(rel));
  }
  return spec;
}

// ---------------------------------------------------------------- BasedAlgebra

BasedAlgebra::BasedAlgebra(std::string name, int rank, std::vector<BasisElement> basis,
                           std::vector<std::vector<SparseVec>> mult, std::vector<int> generators)
    : name_(std::move(name)), n_(rank), basis_(std::move(basis)), mult_(std::move(mult)),
      gens_(std::move(generators)) {
  if (static_cast<int>(basis_.size()) < n_) throw AlgebraError("basis shorter than rank");
  if (mult_.size() != basis_.size()) throw AlgebraError("multiplication table has wrong size");
  audit();
  if (gens_.empty()) choose_generators();
  compute_expansions();
}

int BasedAlgebra::find_label(std::string_view label) const {
  for (int b = 0; b < dim(); ++b)
    if (basis_[b].label == label) return b;
  return -1;
}

Vec BasedAlgebra::multiply(const Vec& x, const Vec& y) const {
  Vec r(dim());
  for (int i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y[j].is_zero()) continue;
      const Scalar c = x[i] * y[j];
      for (const auto& [k, v] : mult_[i][j]) r[k] += c * v;
    }
  }
  return r;
}

std::vector<int> BasedAlgebra::block(int s, int t) const {
  std::vector<int> out;
  for (int b = 0; b < dim(); ++b)
    if (basis_[b].source == s && basis_[b].target == t) out.push_back(b);
  return out;
}

void BasedAlgebra::audit() const {
  const int d = dim();
  for (int i = 0; i < n_; ++i)
    if (basis_[i].source != i || basis_[i].target != i)
      throw AlgebraError("basis element " + std::to_string(i) + " must be the idempotent e" +
                         std::to_string(i + 1));
  const auto unit = [](int k) { return SparseVec{{k, Scalar(1)}}; };
  for (int x = 0; x < d; ++x) {
    if (mult_[x].size() != static_cast<std::size_t>(d)) throw AlgebraError("ragged multiplication table");
    for (int y = 0; y < d; ++y) {
      const auto& p = mult_[x][y];
      for (const auto& [k, v] : p) {
        if (v.is_zero()) throw AlgebraError("explicit zero in multiplication table");
        if (basis_[y].target != basis_[x].source || basis_[k].source != basis_[y].source ||
            basis_[k].target != basis_[x].target)
          throw AlgebraError("product " + basis_[x].label + "*" + basis_[y].label +
                             " violates the vertex grading");
      }
      if (x < n_ && basis_[y].target == x && p != unit(y))
        throw AlgebraError("e" + std::to_string(x + 1) + " does not act as identity on " + basis_[y].label);
      if (y < n_ && basis_[x].source == y && p != unit(x))
        throw AlgebraError("e" + std::to_string(y + 1) + " does not act as identity on " + basis_[x].label);
    }
  }
  // Associativity on basis triples.
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      if (mult_[x][y].empty()) {
        // (xy)z = 0 must match x(yz).
        for (int z = 0; z < d; ++z) {
          if (basis_[z].target != basis_[y].source) continue;
          Vec acc(d);
          for (const auto& [k, v] : mult_[y][z])
            for (const auto& [m, w] : mult_[x][k]) acc[m] += v * w;
          for (const auto& s : acc)
            if (!s.is_zero()) throw AlgebraError("multiplication table is not associative");
        }
        continue;
      }
      for (int z = 0; z < d; ++z) {
        if (basis_[z].target != basis_[y].source) continue;
        Vec lhs(d), rhs(d);
        for (const auto& [k, v] : mult_[x][y])
          for (const auto& [m, w] : mult_[k][z]) lhs[m] += v * w;
        for (const auto& [k, v] : mult_[y][z])
          for (const auto& [m, w] : mult_[x][k]) rhs[m] += v * w;
        if (lhs != rhs) throw AlgebraError("multiplication table is not associative");
      }
    }
}

void BasedAlgebra::choose_generators() {
  const int d = dim();
  std::vector<Vec> rad2;
  for (int x = n_; x < d; ++x)
    for (int y = n_; y < d; ++y) {
      if (mult_[x][y].empty()) continue;
      Vec v(d);
      for (const auto& [k, c] : mult_[x][y]) v[k] = c;
      rad2.push_back(std::move(v));
    }
  std::vector<Vec> span = rad2;
  std::size_t r = span.empty() ? 0 : tautilt::rank(Mat::from_columns(span, d));
  for (int b = n_; b < d; ++b) {
    Vec e(d);
    e[b] = 1;
    span.push_back(e);
    const std::size_t r2 = tautilt::rank(Mat::from_columns(span, d));
    if (r2 > r) {
      gens_.push_back(b);
      r = r2;
    } else {
      span.pop_back();
    }
  }
}

void BasedAlgebra::compute_expansions() {
  const int d = dim();
  expand_.assign(d, {});
  for (int i = 0; i < n_; ++i) expand_[i].push_back({Scalar(1), {}});
  if (d == n_) return;
  // Breadth-first over generator words, keeping an independent family.
  std::vector<std::vector<int>> words;
  std::vector<Vec> elems;
  std::vector<std::pair<std::vector<int>, Vec>> level;
  for (int g : gens_) {
    Vec v(d);
    v[g] = 1;
    level.emplace_back(std::vector<int>{g}, v);
  }
  std::size_t r = 0;
  for (int len = 1; !level.empty() && len <= d; ++len) {
    std::vector<std::pair<std::vector<int>, Vec>> next;
    for (auto& [w, v] : level) {
      bool zero = std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
      if (zero) continue;
      elems.push_back(v);
      const std::size_t r2 = tautilt::rank(Mat::from_columns(elems, d));
      if (r2 == r) {
        elems.pop_back();
      } else {
        r = r2;
        words.push_back(w);
      }
      for (int g : gens_) {
        if (basis_[g].source != basis_[w.back()].target) continue;
        Vec gv(d);
        gv[g] = 1;
        auto w2 = w;
        w2.push_back(g);
        next.emplace_back(std::move(w2), multiply(gv, v));
      }
    }
    level = std::move(next);
  }
  if (static_cast<int>(r) != d - n_)
    throw AlgebraError("generators do not span the radical (is the algebra basic?)");
  const Mat span = Mat::from_columns(elems, d);
  for (int b = n_; b < d; ++b) {
    Vec e(d);
    e[b] = 1;
    const auto sol = solve(span, e);
    if (!sol) throw AlgebraError("basis element outside generated span");
    for (std::size_t k = 0; k < sol->size(); ++k)
      if (!(*sol)[k].is_zero()) expand_[b].push_back({(*sol)[k], words[k]});
  }
}

int BasedAlgebra::loewy_length() const {
  // Smallest L with rad^L = 0.
  const int d = dim();
  if (d == n_) return 1;
  std::vector<Vec> layer;
  for (int b = n_; b < d; ++b) {
    Vec e(d);
    e[b] = 1;
    layer.push_back(e);
  }
  int L = 1;
  while (!layer.empty()) {
    ++L;
    std::vector<Vec> next;
    for (const auto& v : layer)
      for (int g : gens_) {
        Vec gv(d);
        gv[g] = 1;
        Vec p = multiply(gv, v);
        if (std::any_of(p.begin(), p.end(), [](const Scalar& s) { return !s.is_zero(); }))
          next.push_back(std::move(p));
      }
    if (next.empty()) break;
    const Subspace sp = Subspace::span(Mat::from_columns(next, d));
    layer.clear();
    for (std::size_t k = 0; k < sp.dim(); ++k) layer.push_back(sp.basis().column(k));
  }
  return L;
}

// ---------------------------------------------------------------- compile

namespace {

struct PathTable {
  // All paths of length <= L, grouped by (source, target).
  std::vector<Path> paths;
  std::vector<int> src, tgt;
  std::map<Path, int> index;
};

PathTable enumerate_paths(const Quiver& q, int L, std::size_t cap_count) {
  PathTable t;
  const auto add = [&](Path p, int s, int tg) {
    t.index.emplace(p, static_cast<int>(t.paths.size()));
    t.paths.push_back(std::move(p));
    t.src.push_back(s);
    t.tgt.push_back(tg);
  };
  for (int v = 0; v < q.vertices; ++v) add({-1 - v}, v, v);  // trivial path marker
  std::vector<int> frontier;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    frontier.push_back(static_cast<int>(t.paths.size()));
    add({static_cast<int>(a)}, q.arrows[a].source, q.arrows[a].target);
  }
  for (int len = 2; len <= L; ++len) {
    std::vector<int> next;
    for (int idx : frontier)
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].source != t.tgt[idx]) continue;
        Path p = t.paths[idx];
        p.push_back(static_cast<int>(a));
        next.push_back(static_cast<int>(t.paths.size()));
        add(std::move(p), t.src[idx], q.arrows[a].target);
        if (t.paths.size() > cap_count) throw AlgebraError("path closure too large");
      }
    frontier = std::move(next);
  }
  return t;
}

std::size_t path_len(const Path& p) { return (p.size() == 1 && p[0] < 0) ? 0 : p.size(); }

Path concat(const Path& first, const Path& then) {
  if (path_len(first) == 0) return then;
  if (path_len(then) == 0) return first;
  Path r = first;
  r.insert(r.end(), then.begin(), then.end());
  return r;
}

// Ideal elements of KQ/R^{L+1}: u * rel * v for all paths, truncated.
std::vector<SparseVec> ideal_span(const Quiver& q, const std::vector<Relation>& rels, const PathTable& t,
                                  int L) {
  std::vector<SparseVec> out;
  for (const auto& rel : rels) {
    std::size_t minlen = SIZE_MAX;
    for (const auto& [c, p] : rel.terms) minlen = std::min(minlen, p.size());
    if (static_cast<int>(minlen) > L) continue;
    const int s = q.arrows[rel.terms[0].second.front()].source;
    const int tg = q.arrows[rel.terms[0].second.back()].target;
    for (std::size_t before = 0; before < t.paths.size(); ++before) {
      if (t.tgt[before] != s) continue;
      const std::size_t lb = path_len(t.paths[before]);
      if (lb + minlen > static_cast<std::size_t>(L)) continue;
      for (std::size_t after = 0; after < t.paths.size(); ++after) {
        if (t.src[after] != tg) continue;
        const std::size_t la = path_len(t.paths[after]);
        if (lb + la + minlen > static_cast<std::size_t>(L)) continue;
        SparseVec v;
        for (const auto& [c, p] : rel.terms) {
          if (lb + la + p.size() > static_cast<std::size_t>(L)) continue;
          const Path full = concat(concat(t.paths[before], p), t.paths[after]);
          v.emplace_back(t.index.at(full), c);
        }
        if (!v.empty()) out.push_back(std::move(v));
      }
    }
  }
  return out;
}

struct Reduction {
  // For each path index: normal form as sparse combination of standard paths.
  std::vector<SparseVec> normal;
  std::vector<int> standard;  // path indices, sorted by (length, lex)
};

// Paths ordered by (length, lexicographic arrow indices).
bool path_less(const Path& a, const Path& b) {
  if (path_len(a) != path_len(b)) return path_len(a) < path_len(b);
  return a < b;
}

Reduction reduce_all(const PathTable& t, const std::vector<SparseVec>& ideal) {
  Reduction red;
  red.normal.resize(t.paths.size());
  std::map<std::pair<int, int>, std::vector<int>> blocks;
  for (std::size_t i = 0; i < t.paths.size(); ++i) blocks[{t.src[i], t.tgt[i]}].push_back(static_cast<int>(i));
  for (auto& [key, members] : blocks) {
    // Descending order so that pivots land on the largest paths.
    std::sort(members.begin(), members.end(),
              [&](int a, int b) { return path_less(t.paths[b], t.paths[a]); });
    std::map<int, std::size_t> col;
    for (std::size_t k = 0; k < members.size(); ++k) col[members[k]] = k;
    std::vector<SparseVec> rows;
    for (const auto& v : ideal)
      if (!v.empty() && t.src[v[0].first] == key.first && t.tgt[v[0].first] == key.second) rows.push_back(v);
    std::vector<char> leading(members.size(), 0);
    Mat red_rows;
    std::vector<std::size_t> pivots;
    if (!rows.empty()) {
      Mat m(rows.size(), members.size());
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [idx, c] : rows[r]) m(r, col.at(idx)) += c;
      Echelon e = rref(m);
      red_rows = std::move(e.reduced);
      pivots = std::move(e.pivots);
      for (auto p : pivots) leading[p] = 1;
    }
    for (std::size_t k = 0; k < members.size(); ++k)
      if (!leading[k]) {
        red.standard.push_back(members[k]);
        red.normal[members[k]] = {{members[k], Scalar(1)}};
      }
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      SparseVec nf;
      for (std::size_t k = pivots[r] + 1; k < members.size(); ++k)
        if (!red_rows(r, k).is_zero()) nf.emplace_back(members[k], -red_rows(r, k));
      red.normal[members[pivots[r]]] = std::move(nf);
    }
  }
  std::sort(red.standard.begin(), red.standard.end(), [&](int a, int b) {
    const bool ta = path_len(t.paths[a]) == 0, tb = path_len(t.paths[b]) == 0;
    if (ta != tb) return ta;
    if (ta) return t.src[a] < t.src[b];
    return path_less(t.paths[a], t.paths[b]);
  });
  return red;
}

// True when every path of length exactly L lies in the ideal span.
bool top_layer_killed(const PathTable& t, const Reduction& red, int L) {
  for (std::size_t i = 0; i < t.paths.size(); ++i)
    if (static_cast<int>(path_len(t.paths[i])) == L && !red.normal[i].empty()) {
      // Any surviving normal form means the path is not in the ideal.
      return false;
    }
  return true;
}

std::string path_label(const Quiver& q, const Path& p) {
  if (path_len(p) == 0) return "e" + std::to_string(-p[0]);
  std::string s;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (!s.empty()) s += '*';
    s += q.arrows[*it].name;
  }
  return s;
}

}  // namespace

AlgebraPtr compile(const AlgebraSpec& spec, int path_cap) {
  const Quiver& q = spec.quiver;
  for (const auto& rel : spec.relations) {
    if (rel.terms.empty()) throw AlgebraError("empty relation");
    for (const auto& [c, p] : rel.terms)
      if (p.size() < 2) throw AlgebraError("relation term of length < 2 is not admissible");
  }
  constexpr std::size_t kMaxPaths = 200000;
  int L = 1;
  for (;; ++L) {
    if (L > path_cap)
      throw AlgebraError("path closure did not stabilize below length " + std::to_string(path_cap) +
                         " (infinite-dimensional algebra?)");
    const PathTable t = enumerate_paths(q, L, kMaxPaths);
    const Reduction red = reduce_all(t, ideal_span(q, spec.relations, t, L));
    if (top_layer_killed(t, red, L)) break;
  }
  // The algebra is KQ/(I + R^L) with all length-L paths already in I + R^{L+1}.
  const int top = L - 1;
  const PathTable t = enumerate_paths(q, top, kMaxPaths);
  const Reduction red = reduce_all(t, ideal_span(q, spec.relations, t, top));

  const int n = q.vertices;
  std::vector<int> to_basis(t.paths.size(), -1);
  std::vector<BasisElement> basis;
  for (int idx : red.standard) {
    to_basis[idx] = static_cast<int>(basis.size());
    basis.push_back({t.src[idx], t.tgt[idx], path_label(q, t.paths[idx])});
  }
  const int d = static_cast<int>(basis.size());
  std::vector<std::vector<SparseVec>> mult(d, std::vector<SparseVec>(d));
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      const Path& px = t.paths[red.standard[x]];
      const Path& py = t.paths[red.standard[y]];
      if (basis[y].target != basis[x].source) continue;
      const Path full = concat(py, px);
      if (static_cast<int>(path_len(full)) > top) continue;
      for (const auto& [idx, c] : red.normal[t.index.at(full)]) mult[x][y].emplace_back(to_basis[idx], c);
      std::sort(mult[x][y].begin(), mult[x][y].end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    }
  std::vector<int> gens;
  for (int b = n; b < d; ++b)
    if (path_len(t.paths[red.standard[b]]) == 1) gens.push_back(b);
  return std::make_shared<const BasedAlgebra>(spec.name, n, std::move(basis), std::move(mult), std::move(gens));
}

AlgebraPtr compile_text(std::string_view text, int path_cap) { return compile(parse_algebra(text), path_cap); }

AlgebraPtr opposite(const BasedAlgebra& a) {
  const int d = a.dim();
  std::vector<BasisElement> basis;
  for (int b = 0; b < d; ++b) {
    BasisElement e = a.basis(b);
    std::swap(e.source, e.target);
    basis.push_back(std::move(e));
  }
  std::vector<std::vector<SparseVec>> mult(d, std::vector<SparseVec>(d));
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) mult[x][y] = a.product(y, x);
  return std::make_shared<const BasedAlgebra>(a.name() + "^op", a.rank(), std::move(basis), std::move(mult),
                                              a.generators());
}

// ---------------------------------------------------------------- table isomorphism

namespace {

bool tables_match(const BasedAlgebra& a, const BasedAlgebra& b, const std::vector<int>& pi, int upto) {
  for (int x = 0; x < upto; ++x)
    for (int y = 0; y < upto; ++y) {
      SparseVec mapped;
      bool known = true;
      for (const auto& [k, c] : a.product(x, y)) {
        if (pi[k] < 0) known = false;
        mapped.emplace_back(pi[k], c);
      }
      if (!known) continue;
      std::sort(mapped.begin(), mapped.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
      if (mapped != b.product(pi[x], pi[y])) return false;
    }
  return true;
}

bool extend(const BasedAlgebra& a, const BasedAlgebra& b, const std::vector<int>& sigma, std::vector<int>& pi,
            std::vector<char>& used, int x) {
  if (x == a.dim()) return tables_match(a, b, pi, a.dim());
  const int s = sigma[a.basis(x).source], t = sigma[a.basis(x).target];
  for (int y = b.rank(); y < b.dim(); ++y) {
    if (used[y] || b.basis(y).source != s || b.basis(y).target != t) continue;
    pi[x] = y;
    used[y] = 1;
    if (tables_match(a, b, pi, x + 1) && extend(a, b, sigma, pi, used, x + 1)) return true;
    used[y] = 0;
    pi[x] = -1;
  }
  return false;
}

}  // namespace

bool isomorphic_tables(const BasedAlgebra& a, const BasedAlgebra& b) {
  if (a.dim() != b.dim() || a.rank() != b.rank()) return false;
  std::vector<int> sigma(a.rank());
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    std::vector<int> pi(a.dim(), -1);
    std::vector<char> used(b.dim(), 0);
    for (int i = 0; i < a.rank(); ++i) {
      pi[i] = sigma[i];
      used[sigma[i]] = 1;
    }
    if (extend(a, b, sigma, pi, used, a.rank())) return true;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

}  // namespace tautilt
