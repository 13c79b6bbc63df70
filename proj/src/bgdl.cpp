#include "boardforge/bgdl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

#include "boardforge/analysis.hpp"
#include "boardforge/operators.hpp"

namespace boardforge {

namespace {

// ---------------------------------------------------------------- lexing

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool is_bracket(char c) { return c == '(' || c == ')' || c == '{' || c == '}'; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (is_space(c)) {
        advance();
        continue;
      }
      if (c == '/' && peek(1) == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        continue;
      }
      const Span start = here();
      if (is_bracket(c)) {
        advance();
        const TokenKind k = c == '(' ? TokenKind::LParen : c == ')' ? TokenKind::RParen : c == '{' ? TokenKind::LBrace : TokenKind::RBrace;
        out.push_back({k, std::string(1, c), {}, close(start)});
      } else if (std::isdigit(static_cast<unsigned char>(c)) || (c == '-' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
        out.push_back(number(start));
      } else if (ident_start(c)) {
        out.push_back(word(start));
      } else {
        fail(ErrorCode::LexError, std::string("illegal character '") + c + "'", {start.line, start.column, start.offset, 1});
      }
    }
    return out;
  }

 private:
  char peek(std::size_t ahead) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  Span here() const { return {line_, col_, static_cast<int>(pos_), 0}; }
  Span close(Span s) const {
    s.length = static_cast<int>(pos_) - s.offset;
    return s;
  }

  Token number(Span start) {
    if (text_[pos_] == '-') advance();
    while (std::isdigit(static_cast<unsigned char>(peek(0)))) advance();
    bool real = false;
    if (peek(0) == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      real = true;
      advance();
      while (std::isdigit(static_cast<unsigned char>(peek(0)))) advance();
    }
    if (ident_char(peek(0)) || peek(0) == '.' || peek(0) == ':') {
      while (pos_ < text_.size() && !is_space(peek(0)) && !is_bracket(peek(0))) advance();
      Span s = close(start);
      fail(ErrorCode::LexError, "malformed number '" + std::string(text_.substr(s.offset, s.length)) + "'", s);
    }
    Span s = close(start);
    return {real ? TokenKind::Real : TokenKind::Integer, std::string(text_.substr(s.offset, s.length)), {}, s};
  }

  Token word(Span start) {
    while (ident_char(peek(0))) advance();
    const std::string name(text_.substr(start.offset, pos_ - start.offset));
    if (peek(0) != ':') return {TokenKind::Symbol, name, {}, close(start)};
    advance();
    const std::size_t vstart = pos_;
    while (pos_ < text_.size() && !is_space(peek(0)) && !is_bracket(peek(0))) advance();
    return {TokenKind::KeyVal, name, std::string(text_.substr(vstart, pos_ - vstart)), close(start)};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// ---------------------------------------------------------------- parsing

Span cover(Span a, Span b) {
  a.length = b.end() - a.offset;
  return a;
}

SExpr atom_from_text(const std::string& text, Span span) {
  SExpr e;
  e.span = span;
  e.text = text;
  auto tokens = [&] {
    try {
      return tokenize(text);
    } catch (const BoardError&) {
      return std::vector<Token>{};
    }
  }();
  if (tokens.size() != 1) fail(ErrorCode::LexError, "malformed parameter value '" + text + "'", span);
  switch (tokens[0].kind) {
    case TokenKind::Integer:
      e.kind = SExpr::Kind::Integer;
      std::from_chars(text.data(), text.data() + text.size(), e.integer);
      break;
    case TokenKind::Real:
      e.kind = SExpr::Kind::Real;
      e.real = std::stod(text);
      break;
    case TokenKind::Symbol: e.kind = SExpr::Kind::Symbol; break;
    default: fail(ErrorCode::LexError, "malformed parameter value '" + text + "'", span);
  }
  return e;
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

  SExpr root() {
    if (toks_.empty()) fail(ErrorCode::UnexpectedToken, "empty description", {1, 1, 0, 0});
    SExpr e = expr();
    if (pos_ < toks_.size()) {
      fail(ErrorCode::UnexpectedToken, "unexpected '" + toks_[pos_].text + "' after the description", toks_[pos_].span);
    }
    return e;
  }

 private:
  SExpr expr() {
    const Token& t = toks_[pos_];
    switch (t.kind) {
      case TokenKind::LParen:
      case TokenKind::LBrace: return sequence();
      case TokenKind::RParen:
      case TokenKind::RBrace: fail(ErrorCode::UnbalancedParens, "unmatched '" + t.text + "'", t.span);
      case TokenKind::Symbol:
      case TokenKind::Integer:
      case TokenKind::Real: ++pos_; return atom_from_text(t.text, t.span);
      case TokenKind::KeyVal: {
        ++pos_;
        SExpr e;
        e.kind = SExpr::Kind::KeyVal;
        e.text = t.text;
        e.span = t.span;
        if (!t.value.empty()) {
          Span vspan = t.span;
          const int key_len = static_cast<int>(t.text.size()) + 1;
          vspan.offset += key_len;
          vspan.column += key_len;
          vspan.length -= key_len;
          e.children.push_back(atom_from_text(t.value, vspan));
        } else {
          if (pos_ >= toks_.size()) fail(ErrorCode::UnexpectedToken, "parameter '" + t.text + ":' has no value", t.span);
          e.children.push_back(expr());
          e.span = cover(t.span, e.children.back().span);
        }
        return e;
      }
    }
    fail(ErrorCode::UnexpectedToken, "unexpected token", t.span);
  }

  SExpr sequence() {
    const Token& open = toks_[pos_++];
    const bool paren = open.kind == TokenKind::LParen;
    SExpr e;
    e.kind = paren ? SExpr::Kind::List : SExpr::Kind::Braces;
    while (true) {
      if (pos_ >= toks_.size()) {
        fail(ErrorCode::UnbalancedParens, std::string("'") + open.text + "' is never closed before the end of input",
             open.span);
      }
      const Token& t = toks_[pos_];
      if (t.kind == TokenKind::RParen || t.kind == TokenKind::RBrace) {
        if ((t.kind == TokenKind::RParen) != paren) {
          fail(ErrorCode::UnbalancedParens, "'" + t.text + "' does not match '" + open.text + "'", t.span);
        }
        ++pos_;
        e.span = cover(open.span, t.span);
        return e;
      }
      e.children.push_back(expr());
    }
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------- elaboration

const char* const kUnsupported[] = {
    "celtic", "spiral", "quadhex", "repeat", "wedge", "Star", "Diamond", "Prism", "pyramidal", "limping",
    "fractal", "recursive", "lattice", "projective", "layers", "recoordinate", "splitCrossings",
};

struct Call {
  const SExpr* list;
  std::string head;
  Span head_span;
  std::vector<const SExpr*> args;
  std::map<std::string, const SExpr*> keys;
};

bool is_shape_head(std::string_view h) {
  return h == "square" || h == "rectangle" || h == "hexagon" || h == "triangle" || h == "regular" || h == "poly";
}

std::optional<OperatorKind> operator_kind(std::string_view h) {
  static const std::map<std::string_view, OperatorKind> table = {
      {"dual", OperatorKind::Dual},         {"subdivide", OperatorKind::Subdivide}, {"merge", OperatorKind::Merge},
      {"union", OperatorKind::Merge},       {"intersect", OperatorKind::Intersect}, {"remove", OperatorKind::Remove},
      {"add", OperatorKind::Add},           {"complete", OperatorKind::Complete},   {"rotate", OperatorKind::Rotate},
      {"scale", OperatorKind::Scale},       {"shift", OperatorKind::Shift},         {"skew", OperatorKind::Skew},
      {"trim", OperatorKind::Trim},         {"renumber", OperatorKind::Renumber},   {"makeFaces", OperatorKind::MakeFaces},
      {"keep", OperatorKind::Keep},         {"clip", OperatorKind::Clip},           {"hole", OperatorKind::Hole},
  };
  auto it = table.find(h);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

[[noreturn]] void unknown_head(const std::string& head, Span span) {
  if (is_unsupported_keyword(head)) {
    fail(ErrorCode::UnsupportedKeyword, "'" + head + "' is a recognized board keyword but is not implemented", span);
  }
  fail(ErrorCode::UnknownKeyword, "unknown keyword '" + head + "'", span);
}

Call open_call(const SExpr& e) {
  if (e.kind != SExpr::Kind::List) fail(ErrorCode::TypeError, "expected a parenthesized board expression", e.span);
  if (e.children.empty()) fail(ErrorCode::UnexpectedToken, "empty expression '()'", e.span);
  const SExpr& head = e.children[0];
  if (head.kind != SExpr::Kind::Symbol) fail(ErrorCode::UnexpectedToken, "expression must start with a keyword", head.span);
  Call c{&e, head.text, cover(e.span, head.span), {}, {}};
  for (std::size_t i = 1; i < e.children.size(); ++i) {
    const SExpr& a = e.children[i];
    if (a.kind == SExpr::Kind::KeyVal) {
      if (is_unsupported_keyword(a.text)) {
        fail(ErrorCode::UnsupportedKeyword, "'" + a.text + "' is a recognized board keyword but is not implemented", a.span);
      }
      if (!c.keys.emplace(a.text, &a).second) fail(ErrorCode::TypeError, "parameter '" + a.text + "' given twice", a.span);
    } else {
      c.args.push_back(&a);
    }
  }
  return c;
}

void allow_keys(const Call& c, std::initializer_list<std::string_view> allowed) {
  for (auto& [k, e] : c.keys) {
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
      fail(ErrorCode::TypeError, "'" + c.head + "' takes no parameter '" + k + "'", e->span);
    }
  }
}

int as_int(const SExpr& e, std::string_view what) {
  if (e.kind != SExpr::Kind::Integer) fail(ErrorCode::TypeError, std::string(what) + " must be an integer", e.span);
  return static_cast<int>(e.integer);
}

double as_real(const SExpr& e, std::string_view what) {
  if (!e.is_number()) fail(ErrorCode::TypeError, std::string(what) + " must be a number", e.span);
  return e.number();
}

const SExpr& braces(const SExpr& e, std::string_view what) {
  if (e.kind != SExpr::Kind::Braces) fail(ErrorCode::TypeError, std::string(what) + " must be a {...} list", e.span);
  return e;
}

std::vector<Point2> point_list(const SExpr& e) {
  std::vector<Point2> pts;
  for (const auto& p : braces(e, "point list").children) {
    const auto& pair = braces(p, "point");
    if (pair.children.size() != 2) fail(ErrorCode::ArityError, "a point needs exactly 2 coordinates", p.span);
    pts.push_back({as_real(pair.children[0], "coordinate"), as_real(pair.children[1], "coordinate")});
  }
  return pts;
}

std::vector<std::pair<int, int>> pair_list(const SExpr& e) {
  std::vector<std::pair<int, int>> out;
  for (const auto& p : braces(e, "edge list").children) {
    const auto& pair = braces(p, "edge");
    if (pair.children.size() != 2) fail(ErrorCode::ArityError, "an edge needs exactly 2 vertex indices", p.span);
    out.push_back({as_int(pair.children[0], "vertex index"), as_int(pair.children[1], "vertex index")});
  }
  return out;
}

std::vector<int> int_list(const SExpr& e, std::string_view what) {
  std::vector<int> out;
  for (const auto& x : braces(e, what).children) out.push_back(as_int(x, what));
  return out;
}

void read_use(const Call& c, BoardExpr& node) {
  auto it = c.keys.find("use");
  if (it == c.keys.end()) return;
  const SExpr& v = it->second->children[0];
  auto site = v.kind == SExpr::Kind::Symbol ? parse_site_type(v.text) : std::nullopt;
  if (!site) fail(ErrorCode::TypeError, "use: must be Cell, Vertex or Edge", v.span);
  node.use_site = site;
}

void read_diagonals(const Call& c, BoardExpr& node) {
  auto it = c.keys.find("diagonals");
  if (it == c.keys.end()) return;
  const SExpr& v = it->second->children[0];
  auto d = v.kind == SExpr::Kind::Symbol ? parse_diag_type(v.text) : std::nullopt;
  if (!d) fail(ErrorCode::TypeError, "diagonals: must be Alquerque, Solid, Concentric or Radiating", v.span);
  node.diagonals = d;
}

void require_args(const Call& c, std::size_t lo, std::size_t hi) {
  if (c.args.size() < lo || c.args.size() > hi) {
    std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
    fail(ErrorCode::ArityError,
         "'" + c.head + "' takes " + want + " argument(s), got " + std::to_string(c.args.size()), c.head_span);
  }
}

ShapeSpec shape_spec(const Call& c) {
  ShapeSpec s;
  if (c.head == "square") {
    require_args(c, 1, 1);
    s.kind = ShapeKind::Square;
    s.rows = s.cols = as_int(*c.args[0], "square size");
  } else if (c.head == "rectangle") {
    require_args(c, 2, 2);
    s.kind = ShapeKind::Rectangle;
    s.rows = as_int(*c.args[0], "rectangle rows");
    s.cols = as_int(*c.args[1], "rectangle columns");
  } else if (c.head == "hexagon") {
    require_args(c, 1, 1);
    s.kind = ShapeKind::Hexagon;
    s.rows = as_int(*c.args[0], "hexagon size");
  } else if (c.head == "triangle") {
    require_args(c, 1, 1);
    s.kind = ShapeKind::Triangle;
    s.rows = as_int(*c.args[0], "triangle size");
  } else if (c.head == "regular") {
    require_args(c, 1, 2);
    s.kind = ShapeKind::RegularPolygon;
    s.rows = as_int(*c.args[0], "side count");
    if (c.args.size() == 2) s.size = as_real(*c.args[1], "polygon size");
  } else {
    require_args(c, 1, 1);
    s.kind = ShapeKind::Poly;
    s.points = point_list(*c.args[0]);
  }
  return s;
}

ShapeSpec region_spec(const SExpr& e) {
  Call c = open_call(e);
  if (!is_shape_head(c.head)) {
    if (!operator_kind(c.head) && !parse_tiling_kind(c.head) && c.head != "board" && c.head != "tiling" &&
        c.head != "graph") {
      unknown_head(c.head, c.head_span);
    }
    fail(ErrorCode::TypeError, "expected a shape, got '" + c.head + "'", c.head_span);
  }
  allow_keys(c, {});
  return shape_spec(c);
}

void tiling_args(const Call& c, std::size_t first, BoardExpr& node) {
  const TilingKind kind = node.tiling.kind;
  std::vector<const SExpr*> args(c.args.begin() + static_cast<std::ptrdiff_t>(first), c.args.end());
  if (args.size() == 1 && args[0]->kind == SExpr::Kind::List) {
    node.shape = region_spec(*args[0]);
    return;
  }
  if (kind == TilingKind::Concentric) {
    if (args.size() == 1 && args[0]->kind == SExpr::Kind::Braces) {
      node.tiling.ring_counts = int_list(*args[0], "ring cell count");
    } else {
      for (auto* a : args) node.tiling.ring_counts.push_back(as_int(*a, "ring cell count"));
    }
    if (node.tiling.ring_counts.empty()) {
      fail(ErrorCode::ArityError, "'" + c.head + "' needs ring cell counts", c.head_span);
    }
    return;
  }
  const std::size_t most = (kind == TilingKind::Square || kind == TilingKind::Brick) ? 2 : 1;
  if (args.empty() || args.size() > most) {
    fail(ErrorCode::ArityError,
         "'" + c.head + "' takes " + (most == 2 ? std::string("1..2") : std::string("1")) + " dimension(s), got " +
             std::to_string(args.size()),
         c.head_span);
  }
  node.tiling.rows = as_int(*args[0], "dimension");
  node.tiling.cols = args.size() == 2 ? as_int(*args[1], "dimension") : node.tiling.rows;
}

BoardExpr elab(const SExpr& e);

BoardExpr graph_child(const SExpr& e, const Call& c) {
  if (e.kind != SExpr::Kind::List) fail(ErrorCode::TypeError, "'" + c.head + "' expects a board expression here", e.span);
  return elab(e);
}

BoardExpr elab_operator(const Call& c, OperatorKind op) {
  BoardExpr node;
  node.kind = NodeKind::Operator;
  node.op = op;
  node.keyword = c.head;
  node.span = c.head_span;
  std::vector<const SExpr*> graphs, numbers;
  for (auto* a : c.args) (a->kind == SExpr::Kind::List ? graphs : numbers).push_back(a);
  auto expect = [&](std::size_t g_lo, std::size_t g_hi, std::size_t n_lo, std::size_t n_hi) {
    if (graphs.size() < g_lo || graphs.size() > g_hi || numbers.size() < n_lo || numbers.size() > n_hi) {
      std::string msg = "'" + c.head + "' takes " + std::to_string(g_lo) + (g_hi > g_lo ? "+" : "") + " board argument(s)";
      if (n_hi > 0) msg += " and " + std::to_string(n_lo) + (n_hi > n_lo ? ".." + std::to_string(n_hi) : "") + " number(s)";
      fail(ErrorCode::ArityError, msg, c.head_span);
    }
  };
  switch (op) {
    case OperatorKind::Dual:
    case OperatorKind::Complete:
    case OperatorKind::Trim:
    case OperatorKind::Renumber:
    case OperatorKind::MakeFaces:
      allow_keys(c, {});
      expect(1, 1, 0, 0);
      break;
    case OperatorKind::Subdivide:
      allow_keys(c, {"min"});
      expect(1, 1, 0, 0);
      if (auto it = c.keys.find("min"); it != c.keys.end()) node.min_sides = as_int(it->second->children[0], "min");
      break;
    case OperatorKind::Merge:
    case OperatorKind::Intersect:
      allow_keys(c, {});
      expect(2, 64, 0, 0);
      break;
    case OperatorKind::Remove:
      allow_keys(c, {"cells", "edges", "vertices"});
      expect(1, 1, 0, 0);
      for (auto [key, type] : {std::pair{"vertices", SiteType::Vertex}, std::pair{"edges", SiteType::Edge},
                               std::pair{"cells", SiteType::Cell}}) {
        if (auto it = c.keys.find(key); it != c.keys.end()) {
          for (int i : int_list(it->second->children[0], "element index")) node.elements.push_back({type, i});
        }
      }
      break;
    case OperatorKind::Add:
      allow_keys(c, {"vertices", "edges"});
      expect(1, 1, 0, 0);
      if (auto it = c.keys.find("vertices"); it != c.keys.end()) node.points = point_list(it->second->children[0]);
      if (auto it = c.keys.find("edges"); it != c.keys.end()) node.edges = pair_list(it->second->children[0]);
      break;
    case OperatorKind::Rotate:
    case OperatorKind::Skew:
      allow_keys(c, {});
      expect(1, 1, 1, 1);
      break;
    case OperatorKind::Scale:
      allow_keys(c, {});
      expect(1, 1, 1, 2);
      break;
    case OperatorKind::Shift:
      allow_keys(c, {});
      expect(1, 1, 2, 2);
      break;
    case OperatorKind::Keep:
    case OperatorKind::Clip:
    case OperatorKind::Hole:
      allow_keys(c, {});
      expect(2, 2, 0, 0);
      node.shape = region_spec(*graphs[1]);
      graphs.pop_back();
      break;
  }
  for (auto* n : numbers) node.numbers.push_back(as_real(*n, "parameter"));
  for (auto* g : graphs) node.children.push_back(graph_child(*g, c));
  return node;
}

void propagate_use(BoardExpr& node, SiteType site) {
  if ((node.kind == NodeKind::Tiling || node.kind == NodeKind::Shape) && !node.use_site) {
    node.use_site = site;
    node.tiling.use_site = site;
  }
  for (auto& ch : node.children) propagate_use(ch, site);
}

BoardExpr elab(const SExpr& e) {
  Call c = open_call(e);
  BoardExpr node;
  node.keyword = c.head;
  node.span = c.head_span;

  if (c.head == "board") {
    node.kind = NodeKind::Board;
    allow_keys(c, {"use"});
    require_args(c, 1, 1);
    read_use(c, node);
    node.children.push_back(graph_child(*c.args[0], c));
    if (node.use_site) propagate_use(node.children[0], *node.use_site);
    return node;
  }
  if (c.head == "graph") {
    node.kind = NodeKind::Graph;
    allow_keys(c, {"vertices", "edges"});
    if (!c.args.empty()) {
      require_args(c, 1, 2);
      node.points = point_list(*c.args[0]);
      if (c.args.size() == 2) node.edges = pair_list(*c.args[1]);
    }
    if (auto it = c.keys.find("vertices"); it != c.keys.end()) node.points = point_list(it->second->children[0]);
    if (auto it = c.keys.find("edges"); it != c.keys.end()) node.edges = pair_list(it->second->children[0]);
    return node;
  }
  if (auto op = operator_kind(c.head)) return elab_operator(c, *op);

  if (is_shape_head(c.head)) {
    node.kind = NodeKind::Shape;
    allow_keys(c, {"use", "diagonals"});
    read_use(c, node);
    read_diagonals(c, node);
    node.shape = shape_spec(c);
    node.tiling.kind = natural_tiling(node.shape->kind);
    node.tiling.use_site = node.use_site.value_or(SiteType::Cell);
    return node;
  }

  std::optional<TilingKind> kind;
  std::size_t first = 0;
  if (c.head == "tiling") {
    if (c.args.empty()) fail(ErrorCode::ArityError, "'tiling' needs a tiling kind", c.head_span);
    const SExpr& k = *c.args[0];
    if (k.kind != SExpr::Kind::Symbol) fail(ErrorCode::TypeError, "tiling kind must be a name such as T3464", k.span);
    kind = parse_tiling_kind(k.text);
    if (!kind) unknown_head(k.text, k.span);
    first = 1;
  } else {
    kind = parse_tiling_kind(c.head);
  }
  if (!kind) unknown_head(c.head, c.head_span);
  node.kind = NodeKind::Tiling;
  node.tiling.kind = *kind;
  allow_keys(c, {"use", "diagonals"});
  read_use(c, node);
  read_diagonals(c, node);
  node.tiling.use_site = node.use_site.value_or(SiteType::Cell);
  tiling_args(c, first, node);
  return node;
}

// ---------------------------------------------------------------- evaluation

BoardGraph eval_node(const BoardExpr& node, const EvalOptions& options);

BoardGraph eval_unlocated(const BoardExpr& node, const EvalOptions& options) {
  switch (node.kind) {
    case NodeKind::Board: {
      BoardGraph g = eval_node(node.children[0], options);
      if (node.use_site) g.default_site = *node.use_site;
      g.analysis = analyze(g, options.branching);
      return g;
    }
    case NodeKind::Graph: return build_graph(node.points, node.edges);
    case NodeKind::Tiling:
    case NodeKind::Shape: {
      BoardGraph g;
      const SiteType use = node.use_site.value_or(SiteType::Cell);
      if (node.shape && (node.shape->kind == ShapeKind::RegularPolygon || node.shape->kind == ShapeKind::Poly) &&
          node.kind == NodeKind::Shape) {
        g = from_polygons({shape_to_polygon(*node.shape, TilingKind::Square).points()});
      } else if (node.shape) {
        g = tile_shape(node.tiling.kind, *node.shape, use);
      } else {
        g = generate(node.tiling);
      }
      if (node.diagonals) g = add_diagonal_edges(g, *node.diagonals);
      g.default_site = use;
      return g;
    }
    case NodeKind::Operator: break;
  }
  std::vector<BoardGraph> in;
  for (const auto& ch : node.children) in.push_back(eval_node(ch, options));
  const auto& p = node.numbers;
  switch (node.op) {
    case OperatorKind::Dual: return dual(in[0]);
    case OperatorKind::Subdivide: return subdivide(in[0], node.min_sides);
    case OperatorKind::Merge:
    case OperatorKind::Intersect: {
      BoardGraph acc = std::move(in[0]);
      for (std::size_t i = 1; i < in.size(); ++i) acc = node.op == OperatorKind::Merge ? merge(acc, in[i]) : intersect(acc, in[i]);
      return acc;
    }
    case OperatorKind::Remove: return remove_elements(in[0], node.elements);
    case OperatorKind::Add: return add_elements(in[0], node.points, node.edges);
    case OperatorKind::Complete: return complete(in[0]);
    case OperatorKind::Rotate: return rotate(in[0], p[0]);
    case OperatorKind::Scale: return scale(in[0], p[0], p.size() > 1 ? p[1] : p[0]);
    case OperatorKind::Shift: return shift(in[0], p[0], p[1]);
    case OperatorKind::Skew: return skew(in[0], p[0]);
    case OperatorKind::Trim: return trim(in[0]);
    case OperatorKind::Renumber: return renumber(in[0]);
    case OperatorKind::MakeFaces: return make_faces(in[0]);
    case OperatorKind::Keep:
    case OperatorKind::Clip:
    case OperatorKind::Hole: {
      const BoardExpr& src = node.children[0];
      TilingKind frame = natural_tiling(node.shape->kind);
      if (src.kind == NodeKind::Tiling || src.kind == NodeKind::Shape) frame = src.tiling.kind;
      Polygon region;
      try {
        region = shape_to_polygon(*node.shape, frame);
      } catch (const BoardError& e) {
        if (e.code() != ErrorCode::IncompatibleShape) throw;
        region = shape_to_polygon(*node.shape, natural_tiling(node.shape->kind));
      }
      const RestrictMode mode = node.op == OperatorKind::Keep   ? RestrictMode::Keep
                                : node.op == OperatorKind::Clip ? RestrictMode::Clip
                                                                : RestrictMode::Hole;
      return restrict(in[0], region, mode);
    }
  }
  fail(ErrorCode::Unsupported, "unhandled operator");
}

BoardGraph eval_node(const BoardExpr& node, const EvalOptions& options) {
  try {
    return eval_unlocated(node, options);
  } catch (const BoardError& e) {
    throw e.located(node.span);
  }
}

void print_into(const SExpr& e, std::string& out) {
  switch (e.kind) {
    case SExpr::Kind::Symbol:
    case SExpr::Kind::Integer:
    case SExpr::Kind::Real: out += e.text; return;
    case SExpr::Kind::KeyVal:
      out += e.text;
      out += ':';
      print_into(e.children[0], out);
      return;
    case SExpr::Kind::List:
    case SExpr::Kind::Braces: {
      const bool list = e.kind == SExpr::Kind::List;
      out += list ? '(' : '{';
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += ' ';
        print_into(e.children[i], out);
      }
      out += list ? ')' : '}';
      return;
    }
  }
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) { return Lexer(text).run(); }

bool SExpr::same_as(const SExpr& o) const {
  if (kind != o.kind || text != o.text || children.size() != o.children.size()) return false;
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (!children[i].same_as(o.children[i])) return false;
  }
  return true;
}

SExpr parse(const std::vector<Token>& tokens) { return Parser(tokens).root(); }

SExpr parse(std::string_view text) { return parse(tokenize(text)); }

std::string print(const SExpr& expr) {
  std::string out;
  print_into(expr, out);
  return out;
}

std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::Dual: return "dual";
    case OperatorKind::Subdivide: return "subdivide";
    case OperatorKind::Merge: return "merge";
    case OperatorKind::Intersect: return "intersect";
    case OperatorKind::Remove: return "remove";
    case OperatorKind::Add: return "add";
    case OperatorKind::Complete: return "complete";
    case OperatorKind::Rotate: return "rotate";
    case OperatorKind::Scale: return "scale";
    case OperatorKind::Shift: return "shift";
    case OperatorKind::Skew: return "skew";
    case OperatorKind::Trim: return "trim";
    case OperatorKind::Renumber: return "renumber";
    case OperatorKind::MakeFaces: return "makeFaces";
    case OperatorKind::Keep: return "keep";
    case OperatorKind::Clip: return "clip";
    case OperatorKind::Hole: return "hole";
  }
  return "?";
}

bool is_unsupported_keyword(std::string_view head) {
  for (const char* k : kUnsupported) {
    if (head == k) return true;
  }
  return false;
}

BoardExpr elaborate(const SExpr& expr) { return elab(expr); }

BoardGraph evaluate(const BoardExpr& expr, const EvalOptions& options) { return eval_node(expr, options); }

BoardGraph evaluate_text(std::string_view text, const EvalOptions& options) {
  return evaluate(elaborate(parse(text)), options);
}

}  // namespace boardforge
