#include "nbe/printer.hpp"

#include <algorithm>
#include <sstream>

#include "nbe/detail/overloaded.hpp"

namespace nbe {

using detail::overloaded;

namespace {

enum Level { kTerm = 0, kApp = 1, kAtom = 2 };

class Printer {
 public:
  explicit Printer(const NamedCtx& ctx) {
    for (const auto& entry : ctx.outermost_first()) scope_.push_back(entry.name);
  }

  void print(const Term& t, int level) {
    std::visit(overloaded{
                   [&](const Var& v) {
                     if (v.index >= scope_.size()) {
                       throw ScopeError("cannot print unbound variable #" + std::to_string(v.index));
                     }
                     os_ << scope_[scope_.size() - 1 - v.index];
                   },
                   [&](const UnitIntro&) { os_ << "()"; },
                   [&](const Pair& p) {
                     os_ << '(';
                     print(p.first, kTerm);
                     os_ << ", ";
                     print(p.second, kTerm);
                     os_ << ')';
                   },
                   [&](const Fst& p) {
                     os_ << "fst ";
                     print(p.pair, kAtom);
                   },
                   [&](const Snd& p) {
                     os_ << "snd ";
                     print(p.pair, kAtom);
                   },
                   [&](const Abs& a) {
                     if (level > kTerm) os_ << '(';
                     std::string name = fresh();
                     os_ << '\\' << name << ':' << a.domain << ". ";
                     scope_.push_back(std::move(name));
                     print(a.body, kTerm);
                     scope_.pop_back();
                     if (level > kTerm) os_ << ')';
                   },
                   [&](const App& a) {
                     if (level > kApp) os_ << '(';
                     print(a.fun, kApp);
                     os_ << ' ';
                     print(a.arg, kAtom);
                     if (level > kApp) os_ << ')';
                   },
               },
               t.node());
  }

  std::string str() const { return os_.str(); }

 private:
  std::string fresh() const {
    for (std::size_t k = 0;; ++k) {
      std::string candidate = "x" + std::to_string(k);
      if (std::find(scope_.begin(), scope_.end(), candidate) == scope_.end()) return candidate;
    }
  }

  std::vector<std::string> scope_;
  std::ostringstream os_;
};

}  // namespace

std::string print_term(const Term& term, const NamedCtx& ctx) {
  Printer p(ctx);
  p.print(term, kTerm);
  return p.str();
}

std::string print_nf(const Nf& n, const NamedCtx& ctx) { return print_term(embed_nf(n), ctx); }

}  // namespace nbe
