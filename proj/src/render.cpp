#include "distcalc/render.hpp"

#include <charconv>
#include <cmath>
#include <optional>

namespace distcalc {

namespace {

std::string shortest(double v) {
  if (v == 0.0) return "0";
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

struct NamedConstant {
  double value;
  const char* name;
};

const NamedConstant kConstants[] = {
    {kPi, "pi"},
    {kSqrtPi, "sqrt(pi)"},
    {2.5066282746310005024, "sqrt(2*pi)"},  // sqrt(2 pi)
    {kPi * kPi, "pi^2"},
    {kEulerGamma, "gamma_em"},
};

}  // namespace

std::string render_real(double v) {
  if (v == 0.0) return "0";
  for (const auto& c : kConstants) {
    const double q = v / c.value;
    // Accept integer and half/quarter multiples of the named constants.
    for (double denom : {1.0, 2.0, 4.0}) {
      const double qd = q * denom;
      if (std::abs(qd - std::round(qd)) <= 1e-12 * std::max(1.0, std::abs(qd)) &&
          std::round(qd) != 0.0 && std::abs(qd) < 1e6) {
        const double m = std::round(qd) / denom;
        if (m == 1.0) return c.name;
        if (m == -1.0) return std::string("-") + c.name;
        return shortest(m) + "*" + c.name;
      }
    }
  }
  return shortest(v);
}

namespace {

bool close(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

bool cclose(Complex a, Complex b) {
  return close(a.real(), b.real()) && close(a.imag(), b.imag());
}

// "i"-aware coefficient text; empty for 1, "-" for -1.
std::string coeff_prefix(Complex c) {
  if (c.imag() == 0.0) {
    if (c.real() == 1.0) return "";
    if (c.real() == -1.0) return "-";
    return render_real(c.real()) + "*";
  }
  if (c.real() == 0.0) {
    if (c.imag() == 1.0) return "i*";
    if (c.imag() == -1.0) return "-i*";
    const std::string mag = render_real(std::abs(c.imag())) + "*";
    return (c.imag() < 0 ? "-i*" : "i*") + mag;
  }
  return "(" + render_real(c.real()) +
         (c.imag() < 0 ? "-" + (c.imag() == -1.0 ? std::string()
                                                 : render_real(-c.imag()) + "*") +
                             "i"
                       : "+" + (c.imag() == 1.0 ? std::string()
                                                : render_real(c.imag()) + "*") +
                             "i") +
         ")*";
}

std::string standalone_coeff(Complex c) {
  if (c.imag() == 0.0) return render_real(c.real());
  if (c.real() == 0.0) {
    if (c.imag() == 1.0) return "i";
    if (c.imag() == -1.0) return "-i";
    return (c.imag() < 0 ? "-i*" : "i*") + render_real(std::abs(c.imag()));
  }
  std::string s = coeff_prefix(c);
  s.pop_back();  // trailing '*'
  return s;
}

}  // namespace

std::string render_atom(const Atom& a) {
  if (const auto* p = std::get_if<PowerLog>(&a)) {
    const bool pos = p->side == Side::Positive;
    std::string body = pos ? "H(x)" : "H(-x)";
    int factors = 1;
    if (p->gamma != 0.0) {
      body += pos ? "*x^" : "*|x|^";
      body += shortest(p->gamma);
      ++factors;
    }
    if (p->log_pow == 1) {
      body += pos ? "*log(x)" : "*log|x|";
      ++factors;
    }
    if (p->omega != 0.0) {
      body += "*exp(-i*" + shortest(p->omega) + "*x)";
      ++factors;
    }
    if (p->decay != 0.0) {
      body += "*exp(-" + shortest(p->decay) + "*|x|)";
      ++factors;
    }
    if (factors == 1) return body;  // bare H(x) / H(-x)
    return "Pf(" + body + ")";
  }
  if (const auto* d = std::get_if<DeltaDeriv>(&a)) {
    std::string s = "delta";
    for (int i = 0; i < d->order; ++i) s += '\'';
    if (d->shift != 0.0) s += "(" + shortest(d->shift) + ")";
    return s;
  }
  if (const auto* h = std::get_if<Harmonic>(&a))
    return "exp(i*" + shortest(h->freq) + "*x)";
  if (const auto* r = std::get_if<RationalPole>(&a)) {
    // Pf(x - z)^{-m} prints with explicit pole coordinates; re-deriving
    // them through rat()'s root finder would not round-trip bit-exactly.
    std::string s = "pole(" + shortest(r->pole.real());
    s += r->pole.imag() >= 0 ? "+" + shortest(r->pole.imag())
                             : "-" + shortest(-r->pole.imag());
    s += "*i; " + std::to_string(r->mult) + ")";
    return s;
  }
  const auto& k = std::get<AnalyticKernel>(a);
  return std::string("kernel(") +
         (k.kind == KernelKind::FermiSinh ? "fermi" : "bose") + "; " +
         shortest(k.beta) + ")";
}

std::string render(const Expression& e) {
  const Expression cn = canonicalize(e);
  if (cn.terms.empty()) return "0";

  // Pair up half-line power atoms into the standard whole-line displays.
  struct Piece {
    Complex coeff;
    std::string text;  // empty text = bare constant
  };
  std::vector<Piece> pieces;
  std::vector<char> used(cn.terms.size(), 0);

  for (size_t i = 0; i < cn.terms.size(); ++i) {
    if (used[i]) continue;
    const auto* p = std::get_if<PowerLog>(&cn.terms[i].atom);
    if (p == nullptr || p->side != Side::Positive || p->omega != 0.0 ||
        p->decay != 0.0) {
      continue;
    }
    // Find the mirror atom.
    for (size_t j = 0; j < cn.terms.size(); ++j) {
      if (used[j] || j == i) continue;
      const auto* q = std::get_if<PowerLog>(&cn.terms[j].atom);
      if (q == nullptr || q->side != Side::Negative) continue;
      if (!close(q->gamma, p->gamma) || q->log_pow != p->log_pow ||
          q->omega != 0.0 || q->decay != 0.0)
        continue;
      const Complex cp = cn.terms[i].coeff;
      const Complex cq = cn.terms[j].coeff;
      std::optional<Piece> piece;
      const std::string gtxt = shortest(p->gamma);
      if (p->log_pow == 0) {
        if (close(p->gamma, -1.0) && cclose(cq, -cp))
          piece = Piece{cp, "Vp(1/x)"};
        else if (close(p->gamma, 0.0) && cclose(cq, cp))
          piece = Piece{cp, ""};  // constant
        else if (close(p->gamma, 0.0) && cclose(cq, -cp))
          piece = Piece{cp, "sgn(x)"};
        else if (cclose(cq, cp * branch_pow(-1.0, p->gamma)))
          piece = Piece{cp, "Pf(x^" + gtxt + ")"};
        else if (cclose(cq, cp))
          piece = Piece{cp, "Pf(|x|^" + gtxt + ")"};
      } else {
        const double parity = near_int(p->gamma) &&
                                      std::llround(p->gamma) % 2 != 0
                                  ? -1.0
                                  : 1.0;
        if (close(p->gamma, 0.0) && cclose(cq, cp))
          piece = Piece{cp, "log|x|"};
        else if (near_int(p->gamma) && cclose(cq, parity * cp))
          piece = Piece{cp, "Pf(x^" + gtxt + "*log|x|)"};
      }
      if (piece) {
        pieces.push_back(*piece);
        used[i] = used[j] = 1;
        break;
      }
    }
  }
  for (size_t i = 0; i < cn.terms.size(); ++i)
    if (!used[i])
      pieces.push_back({cn.terms[i].coeff, render_atom(cn.terms[i].atom)});

  std::string out;
  for (const auto& piece : pieces) {
    std::string term = piece.text.empty()
                           ? standalone_coeff(piece.coeff)
                           : coeff_prefix(piece.coeff) + piece.text;
    if (out.empty()) {
      out = term;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace distcalc
