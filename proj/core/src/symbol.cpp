// framoid - exact computations in framed and tied diagram monoids

#include "framoid/symbol.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "framoid/error.hpp"

namespace framoid {

  bool is_tied_kind(GenKind k) noexcept {
    return k == GenKind::tied_tangle || k == GenKind::tied_rook
           || k == GenKind::tied_rook_product;
  }

  void validate(GenSymbol const& sym, int n) {
    auto fail = [&sym, n](char const* why) {
      throw InvalidSymbol("symbol " + to_string(sym) + " invalid for n = "
                          + std::to_string(n) + ": " + why);
    };
    switch (sym.kind) {
      case GenKind::tangle:
      case GenKind::crossing:
      case GenKind::tied_tangle:
        if (sym.i < 1 || sym.i > n - 1) {
          fail("index must lie in [1, n-1]");
        }
        break;
      case GenKind::bead:
      case GenKind::rook:
      case GenKind::rook_product:
      case GenKind::tied_rook:
      case GenKind::tied_rook_product:
        if (sym.i < 1 || sym.i > n) {
          fail("index must lie in [1, n]");
        }
        break;
      case GenKind::tie:
        if (sym.i < 1 || sym.j > n || sym.i >= sym.j) {
          fail("indices must satisfy 1 <= i < j <= n");
        }
        break;
    }
  }

  std::string to_string(GenSymbol const& sym) {
    std::string out;
    switch (sym.kind) {
      case GenKind::tangle:
        out = "t";
        break;
      case GenKind::crossing:
        out = "s";
        break;
      case GenKind::bead:
        out = "o";
        break;
      case GenKind::rook:
        out = "r";
        break;
      case GenKind::rook_product:
        out = "p";
        break;
      case GenKind::tie:
        return "e" + std::to_string(sym.i) + "," + std::to_string(sym.j);
      case GenKind::tied_tangle:
        out = "f";
        break;
      case GenKind::tied_rook:
        out = "q";
        break;
      case GenKind::tied_rook_product:
        out = "w";
        break;
    }
    out += std::to_string(sym.i);
    if (sym.kind == GenKind::bead && sym.exponent != 1) {
      out += "^" + std::to_string(sym.exponent);
    }
    return out;
  }

  std::string to_string(Word const& w) {
    std::string out;
    for (auto const& sym : w) {
      if (!out.empty()) {
        out += ' ';
      }
      out += to_string(sym);
    }
    return out;
  }

  namespace {
    // Reads a (possibly signed) integer from the front of s and advances s.
    bool read_int(std::string_view& s, int& value, bool allow_sign) {
      char const* first = s.data();
      char const* last  = s.data() + s.size();
      if (!allow_sign && first != last && *first == '-') {
        return false;
      }
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr == first) {
        return false;
      }
      s.remove_prefix(static_cast<std::size_t>(ptr - first));
      return true;
    }
  }  // namespace

  GenSymbol parse_symbol(std::string_view token) {
    auto bad = [&token](char const* why) {
      return InvalidSymbol("cannot parse token '" + std::string(token)
                           + "': " + why);
    };
    if (token.empty()) {
      throw bad("empty token");
    }
    GenSymbol sym;
    switch (token.front()) {
      case 't':
        sym.kind = GenKind::tangle;
        break;
      case 's':
        sym.kind = GenKind::crossing;
        break;
      case 'o':
      case 'z':
        sym.kind = GenKind::bead;
        break;
      case 'r':
        sym.kind = GenKind::rook;
        break;
      case 'p':
        sym.kind = GenKind::rook_product;
        break;
      case 'e':
        sym.kind = GenKind::tie;
        break;
      case 'f':
        sym.kind = GenKind::tied_tangle;
        break;
      case 'q':
        sym.kind = GenKind::tied_rook;
        break;
      case 'w':
        sym.kind = GenKind::tied_rook_product;
        break;
      default:
        throw bad("unknown generator letter");
    }
    std::string_view rest = token.substr(1);
    if (!read_int(rest, sym.i, false)) {
      throw bad("expected an index");
    }
    if (sym.kind == GenKind::tie) {
      sym.j = sym.i + 1;
      if (!rest.empty() && rest.front() == ',') {
        rest.remove_prefix(1);
        if (!read_int(rest, sym.j, false)) {
          throw bad("expected a second index after ','");
        }
      }
    } else if (sym.kind == GenKind::bead && !rest.empty()
               && rest.front() == '^') {
      rest.remove_prefix(1);
      if (!read_int(rest, sym.exponent, true)) {
        throw bad("expected an exponent after '^'");
      }
    }
    if (!rest.empty()) {
      throw bad("trailing characters");
    }
    return sym;
  }

  Word parse_word(std::string_view text) {
    Word               w;
    std::istringstream in{std::string(text)};
    std::string        token;
    while (in >> token) {
      w.push_back(parse_symbol(token));
    }
    return w;
  }

}  // namespace framoid
