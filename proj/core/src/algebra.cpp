// framoid - exact computations in framed and tied diagram monoids

#include "framoid/algebra.hpp"

#include <algorithm>
#include <cctype>

#include "framoid/error.hpp"

namespace framoid {

  std::string to_string(LoopPolicy p) {
    switch (p) {
      case LoopPolicy::neglect:
        return "neglect";
      case LoopPolicy::alpha:
        return "alpha";
      case LoopPolicy::xy:
        return "xy";
    }
    return "?";
  }

  LoopPolicy loop_policy_from_string(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) {
      return static_cast<char>(std::tolower(c));
    });
    for (auto p : {LoopPolicy::neglect, LoopPolicy::alpha, LoopPolicy::xy}) {
      if (to_string(p) == lower) {
        return p;
      }
    }
    throw InvalidSymbol("unknown loop policy '" + std::string(name) + "'");
  }

  Coefficient loop_scalar(LoopRecord const& loops, LoopPolicy policy) {
    Coefficient out(1);
    if (policy == LoopPolicy::neglect) {
      return out;
    }
    if (policy == LoopPolicy::xy && loops.total() != 0) {
      out *= Coefficient(Var::x_(), static_cast<int>(loops.total()));
    }
    for (int p = 1; p < loops.modulus(); ++p) {
      int const c = static_cast<int>(loops.count(p));
      if (c == 0) {
        continue;
      }
      Var const v = policy == LoopPolicy::alpha ? Var::alpha_(p) : Var::y_(p);
      out *= Coefficient(v, c);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // AlgebraElement
  ////////////////////////////////////////////////////////////////////////

  AlgebraElement::AlgebraElement(MonoidFamily const& fam, LoopPolicy policy)
      : _family(fam), _policy(policy), _terms() {}

  AlgebraElement AlgebraElement::zero(MonoidFamily const& fam,
                                      LoopPolicy          policy) {
    return AlgebraElement(fam, policy);
  }

  AlgebraElement AlgebraElement::one(MonoidFamily const& fam,
                                     LoopPolicy          policy) {
    return from_diagram(fam, policy, identity(fam));
  }

  AlgebraElement AlgebraElement::from_diagram(MonoidFamily const& fam,
                                              LoopPolicy          policy,
                                              Diagram const&      x,
                                              Coefficient const&  c) {
    AlgebraElement out(fam, policy);
    out.add_term(x, c);
    return out;
  }

  AlgebraElement AlgebraElement::from_word(MonoidFamily const& fam,
                                           LoopPolicy          policy,
                                           Word const&         w) {
    AlgebraElement out = one(fam, policy);
    for (auto const& sym : w) {
      out = out * from_diagram(fam, policy, generator(fam, sym));
    }
    return out;
  }

  AlgebraElement AlgebraElement::from_word(MonoidFamily const& fam,
                                           LoopPolicy          policy,
                                           std::string_view    w) {
    return from_word(fam, policy, parse_word(w));
  }

  Coefficient AlgebraElement::coefficient(Diagram const& x) const {
    auto it = _terms.find(x);
    return it == _terms.end() ? Coefficient() : it->second;
  }

  AlgebraElement& AlgebraElement::add_term(Diagram const& x,
                                           Coefficient const& c) {
    if (x.degree() != _family.degree() || x.modulus() != _family.modulus()
        || x.tied() != _family.tied()) {
      throw AmbientMismatch("diagram " + encode(x) + " does not lie in "
                            + _family.to_string());
    }
    if (c.is_zero()) {
      return *this;
    }
    auto [it, inserted] = _terms.emplace(x, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) {
        _terms.erase(it);
      }
    }
    return *this;
  }

  void AlgebraElement::check_ambient(AlgebraElement const& that) const {
    if (!(_family == that._family) || _policy != that._policy) {
      throw AmbientMismatch("cannot combine elements of "
                            + _family.to_string() + " [" + framoid::to_string(_policy)
                            + "] and " + that._family.to_string() + " ["
                            + framoid::to_string(that._policy) + "]");
    }
  }

  AlgebraElement& AlgebraElement::operator+=(AlgebraElement const& that) {
    check_ambient(that);
    for (auto const& [x, c] : that._terms) {
      add_term(x, c);
    }
    return *this;
  }

  AlgebraElement& AlgebraElement::operator-=(AlgebraElement const& that) {
    check_ambient(that);
    for (auto const& [x, c] : that._terms) {
      add_term(x, -c);
    }
    return *this;
  }

  AlgebraElement& AlgebraElement::operator*=(Coefficient const& c) {
    if (c.is_zero()) {
      _terms.clear();
      return *this;
    }
    for (auto& [x, coeff] : _terms) {
      coeff *= c;
    }
    return *this;
  }

  AlgebraElement operator*(AlgebraElement const& a, AlgebraElement const& b) {
    a.check_ambient(b);
    AlgebraElement out(a._family, a._policy);
    auto const     rules = a._family.rules();
    for (auto const& [x, cx] : a._terms) {
      for (auto const& [y, cy] : b._terms) {
        auto r = compose(x, y, rules);
        out.add_term(r.diagram, cx * cy * loop_scalar(r.loops, a._policy));
      }
    }
    return out;
  }

  bool AlgebraElement::operator==(AlgebraElement const& that) const {
    return _family == that._family && _policy == that._policy
           && _terms == that._terms;
  }

  std::string AlgebraElement::to_string() const {
    if (_terms.empty()) {
      return "0";
    }
    std::string out;
    for (auto const& [x, c] : _terms) {
      if (!out.empty()) {
        out += " + ";
      }
      out += "(" + c.to_string() + ") * [" + encode(x) + "]";
    }
    return out;
  }

  bool equal(AlgebraElement const& a, AlgebraElement const& b) {
    return a == b;
  }

  AlgebraElement multiply(AlgebraElement const& a, AlgebraElement const& b) {
    return a * b;
  }

  ////////////////////////////////////////////////////////////////////////
  // Bridges
  ////////////////////////////////////////////////////////////////////////

  namespace {
    int residue(int k, int d) {
      return ((k % d) + d) % d;
    }

    Coefficient one_over(int d) {
      return Coefficient(mpq_class(1, d));
    }
  }  // namespace

  AlgebraElement bead(MonoidFamily const& fam, LoopPolicy policy, int i, int k) {
    return AlgebraElement::from_diagram(
        fam, policy, generator(fam, GenSymbol::o(i, residue(k, fam.modulus()))));
  }

  AlgebraElement bridge_e(MonoidFamily const& fam,
                          LoopPolicy          policy,
                          int                 i,
                          int                 j) {
    validate(GenSymbol::e(i, j), fam.degree());
    int const      d = fam.modulus();
    AlgebraElement out(fam, policy);
    for (int k = 0; k < d; ++k) {
      out += bead(fam, policy, i, k) * bead(fam, policy, j, -k);
    }
    return out * one_over(d);
  }

  namespace {
    AlgebraElement conjugated_average(MonoidFamily const& fam,
                                      LoopPolicy          policy,
                                      GenSymbol const&    middle,
                                      int                 left,
                                      int                 right) {
      int const      d = fam.modulus();
      auto const     m = AlgebraElement::from_diagram(fam, policy, generator(fam, middle));
      AlgebraElement out(fam, policy);
      for (int k = 0; k < d; ++k) {
        out += bead(fam, policy, left, k) * m * bead(fam, policy, right, -k);
      }
      return out * one_over(d);
    }
  }  // namespace

  AlgebraElement bridge_f(MonoidFamily const& fam, LoopPolicy policy, int i) {
    return conjugated_average(fam, policy, GenSymbol::t(i), i, i);
  }

  AlgebraElement bridge_q(MonoidFamily const& fam, LoopPolicy policy, int i) {
    return conjugated_average(fam, policy, GenSymbol::r(i), i, i);
  }

  AlgebraElement bridge_w(MonoidFamily const& fam,
                          LoopPolicy          policy,
                          int                 i,
                          int                 j,
                          int                 h) {
    return conjugated_average(fam, policy, GenSymbol::p(i), j, h);
  }

  AlgebraElement cap_z(MonoidFamily const& fam, LoopPolicy policy, int i) {
    int const      d = fam.modulus();
    AlgebraElement out(fam, policy);
    for (int k = 0; k < d; ++k) {
      LoopRecord loop(d);
      loop.add(k);
      out += bead(fam, policy, i, -k) * loop_scalar(loop, policy);
    }
    return out * one_over(d);
  }

  ////////////////////////////////////////////////////////////////////////
  // Specialization
  ////////////////////////////////////////////////////////////////////////

  Specialization Specialization::deframing(int d) {
    Specialization s;
    for (int k = 1; k < d; ++k) {
      s.values[Var::alpha_(k)] = 1;
      s.values[Var::y_(k)]     = 1;
    }
    s.erase_beads = true;
    return s;
  }

  MonoidFamily specialized_family(MonoidFamily const& fam,
                                  bool                erase_beads,
                                  bool                erase_ties) {
    FamilyName name = fam.name();
    if (erase_ties) {
      switch (name) {
        case FamilyName::tSn:
          name = FamilyName::Sdn;
          break;
        case FamilyName::tJn:
          name = FamilyName::Jn;
          break;
        case FamilyName::tBrn:
          name = FamilyName::Brn;
          break;
        case FamilyName::tRn:
          name = FamilyName::Rn;
          break;
        case FamilyName::tRPrimeN:
          name = FamilyName::RPrimeDn;
          break;
        default:
          break;
      }
    }
    int const d = erase_beads || name != fam.name() ? 1 : fam.modulus();
    return MonoidFamily(name, d, fam.degree());
  }

  AlgebraElement specialize(AlgebraElement const& x, Specialization const& s) {
    auto const target = specialized_family(x.family(), s.erase_beads, s.erase_ties);
    AlgebraElement out(target, s.target_policy);
    for (auto const& [diagram, c] : x.terms()) {
      Diagram y = diagram;
      if (s.erase_beads) {
        y = with_modulus(erase_beads(y), 1);
      }
      if (s.erase_ties) {
        y = erase_ties(y);
      }
      out.add_term(y, c.substitute(s.values));
    }
    return out;
  }

}  // namespace framoid
