#include "exspec/families.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <utility>

namespace exspec {

namespace {

constexpr std::array<std::pair<int, int>, 3> kSporadicV{{{2, 9}, {3, 6}, {6, 5}}};
constexpr std::array<std::pair<int, int>, 9> kSporadicVI{
    {{7, 45}, {8, 27}, {9, 21}, {10, 18}, {12, 15}, {15, 13}, {18, 12}, {24, 11}, {42, 10}}};
constexpr std::array<std::pair<int, int>, 2> kSporadicVII{{{4, 4}, {6, 3}}};
constexpr std::array<std::pair<int, int>, 4> kSporadicVIII{{{4, 10}, {5, 7}, {6, 6}, {9, 5}}};
constexpr std::array<std::pair<int, int>, 2> kSporadicIX{{{3, 4}, {5, 3}}};

// (a, b) -> (p, q, T, D) for the sporadic kinds.
struct SporadicEntry {
  FamilyKind kind;
  int x, y;
  ClaimedSpectrum s;
};

const std::vector<SporadicEntry>& sporadic_table() {
  static const std::vector<SporadicEntry> table{
      {FamilyKind::V, 2, 9, {1, 10, 8, -21}},
      {FamilyKind::V, 3, 6, {1, 8, 6, -19}},
      {FamilyKind::V, 6, 5, {1, 10, 8, -29}},
      {FamilyKind::VI, 7, 45, {1, 50, 48, -154}},
      {FamilyKind::VI, 8, 27, {1, 33, 31, -104}},
      {FamilyKind::VI, 9, 21, {1, 28, 26, -90}},
      {FamilyKind::VI, 10, 18, {1, 26, 24, -85}},
      {FamilyKind::VI, 12, 15, {1, 25, 23, -84}},
      {FamilyKind::VI, 15, 13, {1, 26, 24, -90}},
      {FamilyKind::VI, 18, 12, {1, 28, 26, -99}},
      {FamilyKind::VI, 24, 11, {1, 33, 31, -120}},
      {FamilyKind::VI, 42, 10, {1, 50, 48, -189}},
      {FamilyKind::VII, 4, 4, {4, 10, 2, -35}},
      {FamilyKind::VII, 6, 3, {3, 10, 4, -29}},
      {FamilyKind::VIII, 4, 10, {10, 22, 2, -243}},
      {FamilyKind::VIII, 5, 7, {7, 17, 3, -144}},
      {FamilyKind::VIII, 6, 6, {6, 16, 4, -125}},
      {FamilyKind::VIII, 9, 5, {5, 17, 7, -128}},
      {FamilyKind::IX, 3, 4, {4, 10, 2, -44}},
      {FamilyKind::IX, 5, 3, {3, 10, 4, -39}},
  };
  return table;
}

std::pair<int, int> sporadic_key(const FamilyDescriptor& d) {
  switch (d.kind) {
    case FamilyKind::V:
    case FamilyKind::VI: return {d.a, d.b};
    case FamilyKind::VII: return {d.a, d.m};
    default: return {d.a, d.k};
  }
}

struct KindSyntax {
  FamilyKind kind;
  std::string_view name;
  std::string_view params;  // parameter letters in positional order
};

constexpr std::array<KindSyntax, 10> kSyntax{{
    {FamilyKind::I, "I", "ak"},
    {FamilyKind::II, "II", "kl"},
    {FamilyKind::III, "III", "m"},
    {FamilyKind::IV, "IV", "k"},
    {FamilyKind::V, "V", "ab"},
    {FamilyKind::VI, "VI", "ab"},
    {FamilyKind::VII, "VII", "am"},
    {FamilyKind::VIII, "VIII", "ak"},
    {FamilyKind::IX, "IX", "ak"},
    {FamilyKind::Friendship, "F", "trk"},
}};

const KindSyntax& syntax_of(FamilyKind k) {
  return *std::find_if(kSyntax.begin(), kSyntax.end(), [k](const KindSyntax& s) { return s.kind == k; });
}

int* field(FamilyDescriptor& d, char c) {
  switch (c) {
    case 'a': return &d.a;
    case 'b': return &d.b;
    case 'k': return &d.k;
    case 'l': return &d.l;
    case 'm': return &d.m;
    case 't': return &d.t;
    case 'r': return &d.r;
    default: return nullptr;
  }
}

int get(const FamilyDescriptor& d, char c) { return *field(const_cast<FamilyDescriptor&>(d), c); }

std::string trim(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

}  // namespace

std::string_view kind_name(FamilyKind k) { return syntax_of(k).name; }

FamilyDescriptor parse_descriptor(std::string_view text) {
  std::string s = trim(text);
  // the Greek ell is accepted for l
  for (std::size_t pos; (pos = s.find("\xE2\x84\x93")) != std::string::npos;) s.replace(pos, 3, "l");
  const auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') throw DescriptorError("descriptor '" + std::string(text) + "': expected KIND(params)");
  std::string name = s.substr(0, open);
  if (name == "Friendship" || name == "f") name = "F";
  if (name == "VIIII") name = "IX";
  const auto syn = std::find_if(kSyntax.begin(), kSyntax.end(), [&](const KindSyntax& k) { return k.name == name; });
  if (syn == kSyntax.end()) throw DescriptorError("descriptor '" + std::string(text) + "': unknown kind '" + name + "'");

  FamilyDescriptor d;
  d.kind = syn->kind;
  const std::string body = s.substr(open + 1, s.size() - open - 2);
  std::vector<std::string> parts;
  for (std::size_t start = 0; start <= body.size();) {
    auto comma = body.find(',', start);
    if (comma == std::string::npos) comma = body.size();
    parts.push_back(body.substr(start, comma - start));
    start = comma + 1;
  }
  if (parts.size() != syn->params.size())
    throw DescriptorError("descriptor '" + std::string(text) + "': expected " + std::to_string(syn->params.size()) + " parameters");

  std::string seen;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::string_view part = parts[i];
    char letter = syn->params[i];
    if (auto eq = part.find('='); eq != std::string_view::npos) {
      if (eq != 1 || syn->params.find(part[0]) == std::string_view::npos)
        throw DescriptorError("descriptor '" + std::string(text) + "': unexpected parameter '" + std::string(part.substr(0, eq)) + "'");
      letter = part[0];
      part.remove_prefix(2);
    }
    if (seen.find(letter) != std::string::npos) throw DescriptorError("descriptor '" + std::string(text) + "': repeated parameter");
    seen += letter;
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
      throw DescriptorError("descriptor '" + std::string(text) + "': bad integer '" + std::string(part) + "'");
    *field(d, letter) = value;
  }
  validate(d);
  return d;
}

std::string to_string(const FamilyDescriptor& d) {
  const auto& syn = syntax_of(d.kind);
  std::string out(syn.name);
  out += '(';
  for (std::size_t i = 0; i < syn.params.size(); ++i) {
    if (i) out += ',';
    out += syn.params[i];
    out += '=';
    out += std::to_string(get(d, syn.params[i]));
  }
  out += ')';
  return out;
}

void validate(const FamilyDescriptor& d) {
  auto fail = [&](const std::string& why) { throw DescriptorError(to_string(d) + ": " + why); };
  switch (d.kind) {
    case FamilyKind::I:
      if (d.a < 1 || d.k < 2) fail("requires a >= 1 and k >= 2");
      break;
    case FamilyKind::II:
      if (d.l < 2 || d.k < d.l) fail("requires k >= l >= 2");
      break;
    case FamilyKind::III:
      if (d.m < 3) fail("requires m >= 3");
      break;
    case FamilyKind::IV:
      if (d.k < 2) fail("requires k >= 2");
      break;
    case FamilyKind::Friendship:
      if (d.t < 1 || d.r < 0 || d.r > d.t || d.k < 1) fail("requires 0 <= r <= t, t >= 1 and k >= 1");
      if (d.r == 0 && d.k >= 2 && d.t > 0) fail("r = 0 with k >= 2 is disconnected");
      break;
    default: {
      const auto key = sporadic_key(d);
      const auto& table = sporadic_table();
      if (std::none_of(table.begin(), table.end(), [&](const SporadicEntry& e) { return e.kind == d.kind && e.x == key.first && e.y == key.second; }))
        fail("not one of the listed parameter pairs");
    }
  }
}

std::size_t order(const FamilyDescriptor& d) {
  validate(d);
  auto z = [](int v) { return static_cast<std::size_t>(v); };
  switch (d.kind) {
    case FamilyKind::I: return z(d.a + 3 * d.k);
    case FamilyKind::II: return z(3 * d.k + 3 * d.l);
    case FamilyKind::III: return z(3 * d.m);
    case FamilyKind::IV: return z(3 * d.k + 8);
    case FamilyKind::V: return z(d.a + d.b + 2);
    case FamilyKind::VI: return z(d.a + d.b + 1);
    case FamilyKind::VII: return z(d.a + 3 * d.m);
    case FamilyKind::VIII: return z(d.a + 3 * d.k);
    case FamilyKind::IX: return z(d.a + 3 * d.k + 1);
    case FamilyKind::Friendship: return z(d.r + d.k * (d.t - d.r));
  }
  return 0;
}

FamilyDescriptor normalize(const FamilyDescriptor& d) {
  if (d.kind == FamilyKind::Friendship && d.t - d.r == 3 && d.r >= 1 && d.k >= 2) return FamilyDescriptor::type_I(d.r, d.k);
  return d;
}

bool in_catalog(const FamilyDescriptor& d) { return normalize(d).kind != FamilyKind::Friendship; }

// Blocks -------------------------------------------------------------------

Block Block::transpose() const {
  Block t(cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Block Block::complement() const {
  Block c = *this;
  for (auto& v : c.bits) v = 1 - v;
  return c;
}

IntMatrix Block::to_matrix() const {
  if (rows != cols) throw std::logic_error("Block::to_matrix: block is not square");
  IntMatrix m(rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = (*this)(i, j);
  return m;
}

Block block_J(std::size_t rows, std::size_t cols) {
  Block b(rows, cols);
  std::fill(b.bits.begin(), b.bits.end(), 1);
  return b;
}

Block block_zero(std::size_t rows, std::size_t cols) { return Block(rows, cols); }

Block build_block(BlockKind kind, std::size_t size) {
  if (size == 0) throw std::invalid_argument("build_block: size must be positive");
  switch (kind) {
    case BlockKind::J: return block_J(size, size);
    case BlockKind::Zero: return block_zero(size, size);
    case BlockKind::I: {
      Block b(size, size);
      for (std::size_t i = 0; i < size; ++i) b(i, i) = 1;
      return b;
    }
    case BlockKind::T:
    case BlockKind::R: {
      const std::size_t w = kind == BlockKind::T ? 3 : 2;
      if (size % w) throw std::invalid_argument("build_block: size not divisible by " + std::to_string(w));
      Block b(size, size);
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) b(i, j) = i != j && i / w == j / w;
      return b;
    }
    case BlockKind::S: {
      if (size % 2) throw std::invalid_argument("build_block: S needs an even row count");
      Block b(size, size / 2);
      for (std::size_t j = 0; j < size / 2; ++j) b(2 * j, j) = b(2 * j + 1, j) = 1;
      return b;
    }
  }
  return {};
}

Graph assemble_blocks(const std::vector<std::vector<Block>>& blocks) {
  const std::size_t nb = blocks.size();
  std::vector<std::size_t> offset(nb + 1, 0);
  for (std::size_t i = 0; i < nb; ++i) {
    if (blocks[i].size() != nb) throw std::logic_error("assemble_blocks: block matrix is not square");
    offset[i + 1] = offset[i] + blocks[i][i].rows;
  }
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      if (blocks[i][j].rows != blocks[i][i].rows || blocks[i][j].cols != blocks[j][j].rows)
        throw std::logic_error("assemble_blocks: block (" + std::to_string(i) + "," + std::to_string(j) + ") has inconsistent shape");
  IntMatrix a(offset[nb]);
  for (std::size_t bi = 0; bi < nb; ++bi)
    for (std::size_t bj = 0; bj < nb; ++bj)
      for (std::size_t i = 0; i < blocks[bi][bj].rows; ++i)
        for (std::size_t j = 0; j < blocks[bi][bj].cols; ++j) a(offset[bi] + i, offset[bj] + j) = blocks[bi][bj](i, j);
  if (!a.is_symmetric()) throw std::logic_error("assemble_blocks: assembled matrix is not symmetric");
  return Graph::from_adjacency(a);
}

Graph build_family(const FamilyDescriptor& d) {
  validate(d);
  constexpr auto T = BlockKind::T, R = BlockKind::R, S = BlockKind::S;
  auto sz = [](int v) { return static_cast<std::size_t>(v); };
  auto clique = [](std::size_t n) { return build_block(BlockKind::I, n).complement(); };
  auto J = block_J;
  auto O = block_zero;

  switch (d.kind) {
    case FamilyKind::I: {
      const std::size_t a = sz(d.a), t = sz(3 * d.k);
      return assemble_blocks({{clique(a), J(a, t)}, {J(t, a), build_block(T, t)}});
    }
    case FamilyKind::II: {
      const std::size_t x = sz(3 * d.k), y = sz(3 * d.l);
      return assemble_blocks({{build_block(T, x), J(x, y)}, {J(y, x), build_block(T, y)}});
    }
    case FamilyKind::III: {
      const std::size_t m = sz(d.m);
      const Block s = build_block(S, 2 * m).complement();
      return assemble_blocks({{build_block(R, 2 * m), s}, {s.transpose(), O(m, m)}});
    }
    case FamilyKind::IV: {
      const std::size_t t = sz(3 * d.k);
      return assemble_blocks({{clique(6), J(6, t), O(6, 2)},
                              {J(t, 6), build_block(T, t), J(t, 2)},
                              {O(2, 6), J(2, t), build_block(R, 2)}});
    }
    case FamilyKind::V:
    case FamilyKind::VI: {
      const std::size_t a = sz(d.a), b = sz(d.b), c = d.kind == FamilyKind::V ? 2 : 1;
      const Block last = c == 2 ? build_block(R, 2) : O(1, 1);
      return assemble_blocks({{clique(a), J(a, b), J(a, c)}, {J(b, a), clique(b), O(b, c)}, {J(c, a), O(c, b), last}});
    }
    case FamilyKind::VII: {
      const std::size_t a = sz(d.a), m = sz(d.m);
      const Block s = build_block(S, 2 * m).complement();  // J - S_2m, 2m x m
      return assemble_blocks({{clique(a), J(a, m), O(a, 2 * m)},
                              {J(m, a), O(m, m), s.transpose()},
                              {O(2 * m, a), s, build_block(R, 2 * m)}});
    }
    case FamilyKind::VIII:
    case FamilyKind::IX: {
      const std::size_t a = sz(d.a), k = sz(d.k);
      const Block s = build_block(S, 2 * k).complement();
      if (d.kind == FamilyKind::VIII)
        return assemble_blocks({{clique(a), J(a, 2 * k), O(a, k)},
                                {J(2 * k, a), build_block(R, 2 * k), s},
                                {O(k, a), s.transpose(), O(k, k)}});
      return assemble_blocks({{clique(a), J(a, 2 * k), O(a, k), O(a, 1)},
                              {J(2 * k, a), build_block(R, 2 * k), s, O(2 * k, 1)},
                              {O(k, a), s.transpose(), O(k, k), J(k, 1)},
                              {O(1, a), O(1, 2 * k), J(1, k), O(1, 1)}});
    }
    case FamilyKind::Friendship: {
      const std::size_t r = sz(d.r), w = sz(d.t - d.r), k = sz(d.k);
      Graph g(r + k * w);
      auto block_of = [&](std::size_t v) { return v < r ? std::size_t{0} : 1 + (v - r) / w; };
      for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = u + 1; v < g.order(); ++v)
          if (block_of(u) == 0 || block_of(u) == block_of(v)) g.add_edge(u, v);
      return g;
    }
  }
  return {};
}

std::vector<std::size_t> block_sizes(const FamilyDescriptor& d) {
  validate(d);
  auto sz = [](int v) { return static_cast<std::size_t>(v); };
  switch (d.kind) {
    case FamilyKind::I: return {sz(d.a), sz(3 * d.k)};
    case FamilyKind::II: return {sz(3 * d.k), sz(3 * d.l)};
    case FamilyKind::III: return {sz(2 * d.m), sz(d.m)};
    case FamilyKind::IV: return {6, sz(3 * d.k), 2};
    case FamilyKind::V: return {sz(d.a), sz(d.b), 2};
    case FamilyKind::VI: return {sz(d.a), sz(d.b), 1};
    case FamilyKind::VII: return {sz(d.a), sz(d.m), sz(2 * d.m)};
    case FamilyKind::VIII: return {sz(d.a), sz(2 * d.k), sz(d.k)};
    case FamilyKind::IX: return {sz(d.a), sz(2 * d.k), sz(d.k), 1};
    case FamilyKind::Friendship: {
      std::vector<std::size_t> out;
      if (d.r > 0) out.push_back(sz(d.r));
      for (int i = 0; i < d.k && d.t > d.r; ++i) out.push_back(sz(d.t - d.r));
      return out;
    }
  }
  return {};
}

// Spectra ------------------------------------------------------------------

IntPolynomial ClaimedSpectrum::residual() const {
  return IntPolynomial(std::vector<mpz_class>{mpz_class(static_cast<long>(det)), mpz_class(static_cast<long>(-trace)), mpz_class(1)});
}

ClaimedSpectrum claimed_spectrum(const FamilyDescriptor& desc) {
  validate(desc);
  const FamilyDescriptor d = normalize(desc);
  auto u = [](long v) { return static_cast<std::size_t>(v); };
  const long a = d.a, k = d.k, l = d.l, m = d.m;
  switch (d.kind) {
    case FamilyKind::I: return {u(k - 1), u(2 * k + a - 1), a + 1, 2 * a - 2 - 3 * a * k};
    case FamilyKind::II: return {u(k + l - 2), u(2 * (k + l)), 4, 4 - 9 * k * l};
    case FamilyKind::III: return {u(m - 1), u(2 * m - 1), 1, -2 * (m - 1) * (m - 1)};
    case FamilyKind::IV: return {u(k), u(2 * k + 6), 6, 5 - 24 * k};
    case FamilyKind::Friendship: throw DescriptorError(to_string(d) + ": outside the catalog (needs t - r = 3, r >= 1, k >= 2)");
    default: {
      const auto key = sporadic_key(d);
      for (const auto& e : sporadic_table())
        if (e.kind == d.kind && e.x == key.first && e.y == key.second) return e.s;
    }
  }
  throw DescriptorError(to_string(d) + ": no spectrum on record");
}

CertificationReport certify_family(const FamilyDescriptor& d) {
  CertificationReport rep;
  rep.descriptor = d;
  rep.claimed = claimed_spectrum(d);
  const Graph g = build_family(d);
  rep.order = g.order();
  rep.char_poly = char_poly(g.adjacency_matrix());
  rep.observed = deflate_spectrum(rep.char_poly);
  rep.connected = is_connected(g);

  const IntPolynomial expected = rep.claimed.residual();
  rep.spectrum_matches = rep.observed.mult_two == rep.claimed.p && rep.observed.mult_minus_one == rep.claimed.q &&
                         rep.observed.residual == expected;
  // a monic quadratic has one root above 2 and one below -1 iff it is negative at both points
  const auto& g2 = rep.observed.residual;
  rep.sign_pattern = g2.degree() == 2 && g2.evaluate(mpz_class(2)) < 0 && g2.evaluate(mpz_class(-1)) < 0;

  if (!rep.spectrum_matches)
    rep.message = "expected (x-2)^" + std::to_string(rep.claimed.p) + " (x+1)^" + std::to_string(rep.claimed.q) + " (" +
                  expected.to_string() + "), got (x-2)^" + std::to_string(rep.observed.mult_two) + " (x+1)^" +
                  std::to_string(rep.observed.mult_minus_one) + " (" + rep.observed.residual.to_string() + ")";
  else if (!rep.connected)
    rep.message = "graph is disconnected";
  else if (!rep.sign_pattern)
    rep.message = "exceptional eigenvalues do not straddle [-1, 2]";
  return rep;
}

std::vector<FamilyDescriptor> sporadic_descriptors() {
  std::vector<FamilyDescriptor> out;
  for (auto [a, b] : kSporadicV) out.push_back(FamilyDescriptor::type_V(a, b));
  for (auto [a, b] : kSporadicVI) out.push_back(FamilyDescriptor::type_VI(a, b));
  for (auto [a, m] : kSporadicVII) out.push_back(FamilyDescriptor::type_VII(a, m));
  for (auto [a, k] : kSporadicVIII) out.push_back(FamilyDescriptor::type_VIII(a, k));
  for (auto [a, k] : kSporadicIX) out.push_back(FamilyDescriptor::type_IX(a, k));
  return out;
}

std::vector<FamilyDescriptor> catalog_descriptors(std::size_t max_order) {
  const long n = static_cast<long>(max_order);
  std::vector<FamilyDescriptor> out;
  for (int a = 1; a + 6 <= n; ++a)
    for (int k = 2; a + 3 * k <= n; ++k) out.push_back(FamilyDescriptor::type_I(a, k));
  for (int k = 2; 3 * k + 6 <= n; ++k)
    for (int l = 2; l <= k && 3 * (k + l) <= n; ++l) out.push_back(FamilyDescriptor::type_II(k, l));
  for (int m = 3; 3 * m <= n; ++m) out.push_back(FamilyDescriptor::type_III(m));
  for (int k = 2; 3 * k + 8 <= n; ++k) out.push_back(FamilyDescriptor::type_IV(k));
  for (const auto& d : sporadic_descriptors())
    if (static_cast<long>(order(d)) <= n) out.push_back(d);
  return out;
}

std::vector<FamilyDescriptor> sweep_descriptors(const SweepBounds& b) {
  std::vector<FamilyDescriptor> out;
  for (int a = 1; a <= b.max_a; ++a)
    for (int k = 2; k <= b.max_k_I; ++k) out.push_back(FamilyDescriptor::type_I(a, k));
  for (int k = 2; k <= b.max_k_II; ++k)
    for (int l = 2; l <= k; ++l) out.push_back(FamilyDescriptor::type_II(k, l));
  for (int m = 3; m <= b.max_m_III; ++m) out.push_back(FamilyDescriptor::type_III(m));
  for (int k = 2; k <= b.max_k_IV; ++k) out.push_back(FamilyDescriptor::type_IV(k));
  for (const auto& d : sporadic_descriptors()) out.push_back(d);
  return out;
}

}  // namespace exspec
