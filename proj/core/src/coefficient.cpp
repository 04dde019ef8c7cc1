// framoid - exact computations in framed and tied diagram monoids

#include "framoid/coefficient.hpp"

#include "framoid/error.hpp"

namespace framoid {

  std::string to_string(Var const& v) {
    switch (v.kind) {
      case Var::alpha:
        return "alpha" + std::to_string(v.index);
      case Var::x:
        return "x";
      case Var::y:
        return v.index == 0 ? "y" : "y" + std::to_string(v.index);
      case Var::v:
        return "v";
      case Var::a:
        return "a";
      case Var::q:
        return "q";
    }
    return "?";
  }

  namespace {
    Monomial multiply(Monomial const& m1, Monomial const& m2) {
      Monomial out;
      auto     it1 = m1.begin();
      auto     it2 = m2.begin();
      while (it1 != m1.end() || it2 != m2.end()) {
        if (it2 == m2.end() || (it1 != m1.end() && it1->first < it2->first)) {
          out.push_back(*it1++);
        } else if (it1 == m1.end() || it2->first < it1->first) {
          out.push_back(*it2++);
        } else {
          int e = it1->second + it2->second;
          if (e != 0) {
            out.emplace_back(it1->first, e);
          }
          ++it1;
          ++it2;
        }
      }
      return out;
    }
  }  // namespace

  Coefficient::Coefficient(mpq_class const& c) {
    add_term({}, c);
  }

  Coefficient::Coefficient(Var const& v, int exponent) {
    if (exponent == 0) {
      add_term({}, 1);
    } else {
      add_term({{v, exponent}}, 1);
    }
  }

  void Coefficient::add_term(Monomial const& m, mpq_class const& value) {
    // GMP arithmetic assumes canonical operands; callers may pass 45/3.
    mpq_class c = value;
    c.canonicalize();
    if (c == 0) {
      return;
    }
    auto [it, inserted] = _terms.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) {
        _terms.erase(it);
      }
    }
  }

  bool Coefficient::is_constant() const noexcept {
    return _terms.empty() || (_terms.size() == 1 && _terms.begin()->first.empty());
  }

  mpq_class Coefficient::constant_term() const {
    auto it = _terms.find(Monomial{});
    return it == _terms.end() ? mpq_class(0) : it->second;
  }

  Coefficient& Coefficient::operator+=(Coefficient const& that) {
    for (auto const& [m, c] : that._terms) {
      add_term(m, c);
    }
    return *this;
  }

  Coefficient& Coefficient::operator-=(Coefficient const& that) {
    for (auto const& [m, c] : that._terms) {
      add_term(m, -c);
    }
    return *this;
  }

  Coefficient& Coefficient::operator*=(Coefficient const& that) {
    Coefficient out;
    for (auto const& [m1, c1] : _terms) {
      for (auto const& [m2, c2] : that._terms) {
        out.add_term(multiply(m1, m2), c1 * c2);
      }
    }
    return *this = std::move(out);
  }

  Coefficient Coefficient::operator-() const {
    Coefficient out;
    for (auto const& [m, c] : _terms) {
      out.add_term(m, -c);
    }
    return out;
  }

  Coefficient Coefficient::pow(int e) const {
    if (e < 0) {
      if (_terms.size() != 1) {
        throw Error("only monomials can be inverted, got " + to_string());
      }
      auto const& [m, c] = *_terms.begin();
      Monomial inv;
      for (auto const& [v, k] : m) {
        inv.emplace_back(v, -k);
      }
      Coefficient out;
      out.add_term(inv, 1 / c);
      return out.pow(-e);
    }
    Coefficient out(1);
    for (int k = 0; k < e; ++k) {
      out *= *this;
    }
    return out;
  }

  Coefficient Coefficient::substitute(
      std::map<Var, mpq_class> const& values) const {
    Coefficient out;
    for (auto const& [m, c] : _terms) {
      Monomial  rest;
      mpq_class factor = c;
      for (auto const& [v, k] : m) {
        auto it = values.find(v);
        if (it == values.end()) {
          rest.emplace_back(v, k);
          continue;
        }
        if (it->second == 0 && k < 0) {
          throw Error("cannot send " + framoid::to_string(v)
                      + " to 0: it occurs with a negative exponent");
        }
        mpq_class base = it->second;
        base.canonicalize();
        if (k < 0) {
          base = 1 / base;
        }
        for (int r = 0; r < std::abs(k); ++r) {
          factor *= base;
        }
      }
      out.add_term(rest, factor);
    }
    return out;
  }

  std::string Coefficient::to_string() const {
    if (_terms.empty()) {
      return "0";
    }
    std::string out;
    for (auto const& [m, c] : _terms) {
      mpq_class magnitude = abs(c);
      if (out.empty()) {
        out += c < 0 ? "-" : "";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      bool const unit = magnitude == 1 && !m.empty();
      if (!unit) {
        out += magnitude.get_str();
      }
      for (std::size_t k = 0; k < m.size(); ++k) {
        if (!unit || k != 0) {
          out += '*';
        }
        out += framoid::to_string(m[k].first);
        if (m[k].second != 1) {
          out += "^" + std::to_string(m[k].second);
        }
      }
    }
    return out;
  }

}  // namespace framoid
