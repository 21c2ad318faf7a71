#include "tetracenters/center_expr.hpp"

#include <cctype>
#include <random>
#include <sstream>

namespace tc {

const char* to_string(CoordForm f) { return f == CoordForm::Trilinear ? "trilinear" : "areal"; }

using Kind = ExprNode::Kind;

ExprPtr expr_const(const Rational& q) {
  auto n = std::make_shared<ExprNode>();
  n->kind = Kind::Const;
  n->value = q;
  return n;
}

ExprPtr expr_symbol(Kind k) {
  auto n = std::make_shared<ExprNode>();
  n->kind = k;
  return n;
}

ExprPtr expr_binary(Kind k, ExprPtr l, ExprPtr r) {
  auto n = std::make_shared<ExprNode>();
  n->kind = k;
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

ExprPtr expr_pow(ExprPtr base, long e) {
  auto n = std::make_shared<ExprNode>();
  n->kind = Kind::PowInt;
  n->exponent = e;
  n->lhs = std::move(base);
  return n;
}

namespace {

ExprPtr make_neg(ExprPtr x) {
  auto n = std::make_shared<ExprNode>();
  n->kind = Kind::Neg;
  n->lhs = std::move(x);
  return n;
}

ExprPtr make_pow_r(ExprPtr base, int sign) {
  auto n = std::make_shared<ExprNode>();
  n->kind = Kind::PowR;
  n->r_sign = sign;
  n->lhs = std::move(base);
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(normalize(s)) {}

  ExprPtr run() {
    skip();
    if (pos_ >= s_.size()) throw SyntaxError(pos_, "empty expression");
    ExprPtr e = expr();
    skip();
    if (pos_ < s_.size()) throw SyntaxError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return e;
  }

 private:
  // Maps the Unicode minus sign to '-'.
  static std::string normalize(const std::string& in) {
    std::string out;
    for (std::size_t i = 0; i < in.size(); ++i) {
      if (i + 2 < in.size() && static_cast<unsigned char>(in[i]) == 0xE2 &&
          static_cast<unsigned char>(in[i + 1]) == 0x88 && static_cast<unsigned char>(in[i + 2]) == 0x92) {
        out.push_back('-');
        i += 2;
      } else {
        out.push_back(in[i]);
      }
    }
    return out;
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char ch) {
    skip();
    return pos_ < s_.size() && s_[pos_] == ch;
  }
  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    char ch = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(ch)) || ch == '(' || ch == 'a' || ch == 'b' ||
           ch == 'c' || ch == 'K' || ch == 'r';
  }

  ExprPtr expr() {
    ExprPtr l = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        l = expr_binary(Kind::Add, l, term());
      } else if (peek('-')) {
        ++pos_;
        l = expr_binary(Kind::Sub, l, term());
      } else {
        return l;
      }
    }
  }

  ExprPtr term() {
    ExprPtr l = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        l = expr_binary(Kind::Mul, l, unary());
      } else if (peek('/')) {
        ++pos_;
        l = expr_binary(Kind::Div, l, unary());
      } else if (starts_primary()) {
        l = expr_binary(Kind::Mul, l, power());  // implicit product, e.g. a(b+c)
      } else {
        return l;
      }
    }
  }

  ExprPtr unary() {
    if (peek('-')) {
      ++pos_;
      return make_neg(unary());
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (!peek('^')) return base;
    ++pos_;
    bool paren = false;
    if (peek('(')) {
      paren = true;
      ++pos_;
    }
    int sign = 1;
    if (peek('-')) {
      sign = -1;
      ++pos_;
    } else if (peek('+')) {
      ++pos_;
    }
    skip();
    ExprPtr out;
    if (pos_ < s_.size() && s_[pos_] == 'r') {
      ++pos_;
      out = make_pow_r(base, sign);
    } else if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ - start > 6) throw SyntaxError(start, "exponent too large");
      out = expr_pow(base, sign * std::stol(s_.substr(start, pos_ - start)));
    } else {
      throw SyntaxError(pos_, "exponent must be an integer or r");
    }
    if (paren) {
      if (!peek(')')) throw SyntaxError(pos_, "expected ')'");
      ++pos_;
    }
    if (peek('^')) throw SyntaxError(pos_, "chained exponents need parentheses");
    return out;
  }

  ExprPtr primary() {
    skip();
    if (pos_ >= s_.size()) throw SyntaxError(pos_, "unexpected end of expression");
    char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      ExprPtr e = expr();
      if (!peek(')')) throw SyntaxError(pos_, "expected ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return expr_const(Rational(mpq_class(mpz_class(s_.substr(start, pos_ - start), 10))));
    }
    Kind k;
    switch (ch) {
      case 'a': k = Kind::SymA; break;
      case 'b': k = Kind::SymB; break;
      case 'c': k = Kind::SymC; break;
      case 'K': k = Kind::SymK; break;
      case 'r': k = Kind::SymR; break;
      default: throw SyntaxError(pos_, std::string("unexpected '") + ch + "'");
    }
    ++pos_;
    if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])) &&
        !std::isdigit(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != 'a' && s_[pos_] != 'b' &&
        s_[pos_] != 'c' && s_[pos_] != 'K' && s_[pos_] != 'r')
      throw SyntaxError(pos_ - 1, "unknown identifier");
    return expr_symbol(k);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

// ---- arithmetic in Q(K) ----

struct Field {
  Rational k2;

  Surd add(const Surd& x, const Surd& y) const { return {x.u + y.u, x.v + y.v}; }
  Surd sub(const Surd& x, const Surd& y) const { return {x.u - y.u, x.v - y.v}; }
  Surd mul(const Surd& x, const Surd& y) const {
    if (x.v.is_zero() && y.v.is_zero()) return {x.u * y.u, Rational(0)};
    return {x.u * y.u + x.v * y.v * k2, x.u * y.v + x.v * y.u};
  }
  Surd inv(const Surd& x) const {
    if (x.v.is_zero()) {
      if (x.u.is_zero()) throw Error(ErrorCode::EvaluationSingular, "division by zero in center function");
      return {x.u.reciprocal(), Rational(0)};
    }
    Rational n = x.u * x.u - x.v * x.v * k2;
    if (n.is_zero()) throw Error(ErrorCode::EvaluationSingular, "y^2 - z^2 K^2 vanishes");
    return {x.u / n, -x.v / n};
  }
  Surd pow(Surd x, long e) const {
    if (e < 0) return pow(inv(x), -e);
    if (x.v.is_zero()) return {x.u.pow(e), Rational(0)};
    Surd out{Rational(1), Rational(0)};
    while (e > 0) {
      if (e & 1) out = mul(out, x);
      x = mul(x, x);
      e >>= 1;
    }
    return out;
  }
};

struct Env {
  Rational a, b, c;
  Field field;
  std::optional<Rational> r;
};

const Rational& require_r(const Env& env) {
  if (!env.r) throw Error(ErrorCode::InvalidArgument, "parameter r required");
  return *env.r;
}

std::optional<Surd> eval_surd(const ExprPtr& n, const Env& env) {
  switch (n->kind) {
    case Kind::Const: return Surd{n->value, Rational(0)};
    case Kind::SymA: return Surd{env.a, Rational(0)};
    case Kind::SymB: return Surd{env.b, Rational(0)};
    case Kind::SymC: return Surd{env.c, Rational(0)};
    case Kind::SymK: return Surd{Rational(0), Rational(1)};
    case Kind::SymR: return Surd{require_r(env), Rational(0)};
    case Kind::Neg: {
      auto x = eval_surd(n->lhs, env);
      if (!x) return std::nullopt;
      return Surd{-x->u, -x->v};
    }
    case Kind::PowInt: {
      // K^(2m) is rational directly.
      if (n->lhs->kind == Kind::SymK && n->exponent % 2 == 0) {
        if (n->exponent < 0 && env.field.k2.is_zero())
          throw Error(ErrorCode::EvaluationSingular, "K vanishes");
        return Surd{env.field.k2.pow(n->exponent / 2), Rational(0)};
      }
      auto x = eval_surd(n->lhs, env);
      if (!x) return std::nullopt;
      return env.field.pow(*x, n->exponent);
    }
    case Kind::PowR: {
      Rational e = require_r(env) * Rational(n->r_sign);
      auto x = eval_surd(n->lhs, env);
      if (!x) return std::nullopt;
      if (e.is_integer()) return env.field.pow(*x, e.value().get_num().get_si());
      if (!x->v.is_zero() || x->u.sign() <= 0) return std::nullopt;
      auto root = x->u.exact_root(e.value().get_den().get_ui());
      if (!root) return std::nullopt;
      return Surd{root->pow(e.value().get_num().get_si()), Rational(0)};
    }
    default: break;
  }
  auto l = eval_surd(n->lhs, env);
  if (!l) return std::nullopt;
  auto r = eval_surd(n->rhs, env);
  if (!r) return std::nullopt;
  switch (n->kind) {
    case Kind::Add: return env.field.add(*l, *r);
    case Kind::Sub: return env.field.sub(*l, *r);
    case Kind::Mul: return env.field.mul(*l, *r);
    case Kind::Div: return env.field.mul(*l, env.field.inv(*r));
    default: break;
  }
  throw Error(ErrorCode::InvalidArgument, "bad expression node");
}

Scalar surd_to_scalar(const Surd& s, const Rational& k2, const EvalContext& ctx) {
  if (s.v.is_zero()) return ctx.lift(s.u);
  return ctx.lift(s.u) + ctx.lift(s.v) * ctx.root(k2);
}

Scalar eval_scalar(const ExprPtr& n, const Env& env, const EvalContext& ctx) {
  // Subtrees that stay in Q(K) are evaluated exactly first.
  if (auto s = eval_surd(n, env)) return surd_to_scalar(*s, env.field.k2, ctx);
  switch (n->kind) {
    case Kind::Neg: return -eval_scalar(n->lhs, env, ctx);
    case Kind::PowInt: return pow(eval_scalar(n->lhs, env, ctx), n->exponent);
    case Kind::PowR: {
      Rational e = require_r(env) * Rational(n->r_sign);
      Scalar x = eval_scalar(n->lhs, env, ctx);
      if (ctx.mode == EvalMode::Exact)
        throw Error(ErrorCode::IrrationalInExactMode, "fractional power " + e.str());
      Interval xi = x.to_interval(ctx.precision_bits);
      if (xi.sign() <= 0) throw Error(ErrorCode::EvaluationSingular, "fractional power of a non-positive value");
      return Scalar(xi.pow(e));
    }
    case Kind::Add: return eval_scalar(n->lhs, env, ctx) + eval_scalar(n->rhs, env, ctx);
    case Kind::Sub: return eval_scalar(n->lhs, env, ctx) - eval_scalar(n->rhs, env, ctx);
    case Kind::Mul: return eval_scalar(n->lhs, env, ctx) * eval_scalar(n->rhs, env, ctx);
    case Kind::Div: {
      Scalar d = eval_scalar(n->rhs, env, ctx);
      if (is_zero(d) == ZeroTest::Zero) throw Error(ErrorCode::EvaluationSingular, "division by zero");
      return eval_scalar(n->lhs, env, ctx) / d;
    }
    default: break;
  }
  throw Error(ErrorCode::InvalidArgument, "bad expression node");
}

struct Analysis {
  bool uses_r = false;
  bool uses_k = false;
  bool needs_k = false;
  bool homogeneous = true;
};

Degree analyse_node(const ExprPtr& n, Analysis& an) {
  switch (n->kind) {
    case Kind::Const: return {Rational(0), Rational(0)};
    case Kind::SymA:
    case Kind::SymB:
    case Kind::SymC: return {Rational(1), Rational(0)};
    case Kind::SymK:
      an.uses_k = true;
      an.needs_k = true;
      return {Rational(2), Rational(0)};
    case Kind::SymR: an.uses_r = true; return {Rational(0), Rational(0)};
    case Kind::Neg: return analyse_node(n->lhs, an);
    case Kind::PowInt: {
      Degree d;
      if (n->lhs->kind == Kind::SymK && n->exponent % 2 == 0) {
        an.uses_k = true;
        d = {Rational(2), Rational(0)};
      } else {
        d = analyse_node(n->lhs, an);
      }
      return {d.c0 * Rational(n->exponent), d.c1 * Rational(n->exponent)};
    }
    case Kind::PowR: {
      an.uses_r = true;
      Degree d = analyse_node(n->lhs, an);
      if (!d.c1.is_zero()) an.homogeneous = false;
      return {Rational(0), d.c0 * Rational(n->r_sign)};
    }
    case Kind::Add:
    case Kind::Sub: {
      Degree l = analyse_node(n->lhs, an), r = analyse_node(n->rhs, an);
      if (!(l.c0 == r.c0 && l.c1 == r.c1)) an.homogeneous = false;
      return l;
    }
    case Kind::Mul: {
      Degree l = analyse_node(n->lhs, an), r = analyse_node(n->rhs, an);
      return {l.c0 + r.c0, l.c1 + r.c1};
    }
    case Kind::Div: {
      Degree l = analyse_node(n->lhs, an), r = analyse_node(n->rhs, an);
      return {l.c0 - r.c0, l.c1 - r.c1};
    }
  }
  return {};
}

bool is_atom(const ExprPtr& n) {
  return n->kind == Kind::SymA || n->kind == Kind::SymB || n->kind == Kind::SymC || n->kind == Kind::SymK ||
         n->kind == Kind::SymR || (n->kind == Kind::Const && n->value.is_integer() && n->value.sign() >= 0);
}

void print(std::ostream& os, const ExprPtr& n) {
  auto wrap = [&](const ExprPtr& x) {
    if (is_atom(x)) {
      print(os, x);
    } else {
      os << '(';
      print(os, x);
      os << ')';
    }
  };
  switch (n->kind) {
    case Kind::Const:
      if (n->value.is_integer() && n->value.sign() >= 0) os << n->value.str();
      else os << '(' << n->value.str() << ')';
      return;
    case Kind::SymA: os << 'a'; return;
    case Kind::SymB: os << 'b'; return;
    case Kind::SymC: os << 'c'; return;
    case Kind::SymK: os << 'K'; return;
    case Kind::SymR: os << 'r'; return;
    case Kind::Neg: os << '-'; wrap(n->lhs); return;
    case Kind::PowInt:
      wrap(n->lhs);
      os << '^';
      if (n->exponent < 0) os << '(' << n->exponent << ')';
      else os << n->exponent;
      return;
    case Kind::PowR:
      wrap(n->lhs);
      os << (n->r_sign < 0 ? "^(-r)" : "^r");
      return;
    case Kind::Add: print(os, n->lhs); os << " + "; wrap(n->rhs); return;
    case Kind::Sub: print(os, n->lhs); os << " - "; wrap(n->rhs); return;
    case Kind::Mul: wrap(n->lhs); os << '*'; wrap(n->rhs); return;
    case Kind::Div: wrap(n->lhs); os << '/'; wrap(n->rhs); return;
  }
}

}  // namespace

std::string expr_to_string(const ExprPtr& e) {
  std::ostringstream os;
  print(os, e);
  return os.str();
}

void CenterExpr::analyse() {
  Analysis an;
  degree_ = analyse_node(root_, an);
  uses_r_ = an.uses_r;
  uses_k_ = an.uses_k;
  needs_k_ = an.needs_k;
}

CenterExpr CenterExpr::parse_unchecked(const std::string& text) {
  CenterExpr e;
  e.root_ = Parser(text).run();
  e.text_ = text;
  e.analyse();
  return e;
}

CenterExpr CenterExpr::from_node(ExprPtr node) {
  CenterExpr e;
  e.root_ = std::move(node);
  e.text_ = expr_to_string(e.root_);
  e.analyse();
  return e;
}

CenterExpr CenterExpr::parse(const std::string& text) {
  CenterExpr e = parse_unchecked(text);
  e.validate();
  return e;
}

std::optional<Surd> CenterExpr::evaluate_surd(const Rational& a, const Rational& b, const Rational& c,
                                              const std::optional<Rational>& r) const {
  Env env{a, b, c, Field{heron_area_squared(a, b, c)}, r};
  return eval_surd(root_, env);
}

Scalar CenterExpr::evaluate(const Rational& a, const Rational& b, const Rational& c,
                            const std::optional<Rational>& r, const EvalContext& ctx) const {
  Env env{a, b, c, Field{heron_area_squared(a, b, c)}, r};
  return eval_scalar(root_, env, ctx);
}

void CenterExpr::validate() const {
  Analysis an;
  analyse_node(root_, an);
  if (!an.homogeneous) throw Error(ErrorCode::NotHomogeneous, "'" + text_ + "' mixes degrees");

  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<long> side(2, 40), tnum(1, 9), tden(1, 7), rpick(-2, 3);
  int checked = 0;
  for (int attempt = 0; attempt < 200 && checked < 5; ++attempt) {
    Rational a(side(rng)), b(side(rng)), c(side(rng));
    if (!TriangleSides::is_valid(a, b, c) || a == b || b == c || a == c) continue;
    Rational t(tnum(rng) + 1, tden(rng));
    std::optional<Rational> r;
    if (uses_r_) r = Rational(rpick(rng));
    try {
      auto f = evaluate_surd(a, b, c, r);
      auto fs = evaluate_surd(t * a, t * b, t * c, r);
      auto fw = evaluate_surd(a, c, b, r);
      if (!f || !fs || !fw) continue;
      if (f->u.is_zero() && f->v.is_zero()) continue;
      if (!(fw->u == f->u && fw->v == f->v))
        throw Error(ErrorCode::NotSymmetric, "'" + text_ + "' changes under b<->c");
      Rational d = degree_.at(r.value_or(Rational(0)));
      if (!d.is_integer()) continue;
      Rational scale = t.pow(d.value().get_num().get_si());
      // K scales by t^2, so the K-coefficient picks up an extra t^2.
      if (!(fs->u == scale * f->u && fs->v * t * t == scale * f->v))
        throw Error(ErrorCode::NotHomogeneous, "'" + text_ + "' is not homogeneous");
      ++checked;
    } catch (const Error& err) {
      if (err.code() == ErrorCode::EvaluationSingular) continue;
      throw;
    }
  }
  if (checked == 0) throw Error(ErrorCode::EvaluationSingular, "'" + text_ + "' vanishes or is singular on test triangles");
}

CenterCoords eval_center(const CenterExpr& expr, CoordForm form, const TriangleSides& s,
                         const std::optional<Rational>& r, const EvalContext& ctx) {
  if (expr.uses_r() && !r) throw Error(ErrorCode::InvalidArgument, "center needs parameter r");
  const Rational &a = s.a(), &b = s.b(), &c = s.c();
  return CenterCoords{form,
                      {expr.evaluate(a, b, c, r, ctx), expr.evaluate(b, c, a, r, ctx), expr.evaluate(c, a, b, r, ctx)}};
}

}  // namespace tc
