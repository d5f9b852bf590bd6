#include "nbe/cli.hpp"

#include <pthread.h>

#include <exception>
#include <functional>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "nbe/errors.hpp"
#include "nbe/oracle.hpp"
#include "nbe/parser.hpp"
#include "nbe/printer.hpp"
#include "nbe/semantics.hpp"
#include "nbe/typecheck.hpp"

namespace nbe {

namespace {

constexpr std::size_t kStackBytes = std::size_t{512} << 20;

enum Exit { kOk = 0, kDifferent = 1, kError = 2, kDisagree = 3 };

// Runs `body` to completion on a fresh thread with a large stack, falling
// back to the calling thread if one cannot be created.
void run_with_stack(std::size_t bytes, const std::function<void()>& body) {
  struct Job {
    const std::function<void()>* body;
    std::exception_ptr error;
  } job{&body, nullptr};
  auto trampoline = [](void* arg) -> void* {
    auto* j = static_cast<Job*>(arg);
    try {
      (*j->body)();
    } catch (...) {
      j->error = std::current_exception();
    }
    return nullptr;
  };
  pthread_attr_t attr;
  pthread_t thread;
  bool started = pthread_attr_init(&attr) == 0 && pthread_attr_setstacksize(&attr, bytes) == 0 &&
                 pthread_create(&thread, &attr, trampoline, &job) == 0;
  pthread_attr_destroy(&attr);
  if (!started) {
    body();
    return;
  }
  pthread_join(thread, nullptr);
  if (job.error) std::rethrow_exception(job.error);
}

// Which input a diagnostic refers to.
struct Input {
  std::string label;
  std::string text;
};

void report(std::ostream& err, const Error& e, const Input* input) {
  err << "error: ";
  if (input && e.span()) {
    const auto span = *e.span();
    err << input->label << ':' << span.start << '-' << span.end << ": " << e.what() << '\n';
    err << "  | " << input->text << '\n';
    err << "  | " << std::string(span.start, ' ') << std::string(std::max<std::size_t>(1, span.end - span.start), '^')
        << '\n';
  } else if (input) {
    err << input->label << ':' << 0 << '-' << input->text.size() << ": " << e.what() << '\n';
  } else {
    err << e.what() << '\n';
  }
}

struct Options {
  bool oracle = false;
  bool selfcheck = false;
  std::string ctx;
};

struct Normalized {
  Nf nf;
  NamedCtx ctx;
};

class Driver {
 public:
  Driver(const Options& options, std::ostream& out, std::ostream& err) : options_(options), out_(out), err_(err) {}

  int normalize(const std::string& src) {
    return guarded([&] {
      auto named = context();
      auto n = normal_form(named, {"term", src});
      if (!n) return kDisagree;
      out_ << print_nf(*n, named) << '\n';
      return kOk;
    });
  }

  int check_eq(const std::string& lhs, const std::string& rhs) {
    return guarded([&] {
      auto named = context();
      auto a = normal_form(named, {"term1", lhs});
      if (!a) return kDisagree;
      auto b = normal_form(named, {"term2", rhs});
      if (!b) return kDisagree;
      if (*a == *b) {
        out_ << "EQUAL\n";
        return kOk;
      }
      out_ << "DIFFERENT\n" << print_nf(*a, named) << '\n' << print_nf(*b, named) << '\n';
      return kDifferent;
    });
  }

  int typecheck(const std::string& src) {
    return guarded([&] {
      auto named = context();
      current_ = Input{"term", src};
      auto elaborated = elaborate(named, parse_term(src));
      out_ << elaborated.type << '\n';
      return kOk;
    });
  }

 private:
  template <class Body>
  int guarded(Body&& body) {
    try {
      return body();
    } catch (const Error& e) {
      report(err_, e, current_ ? &*current_ : nullptr);
      return kError;
    }
  }

  NamedCtx context() {
    current_ = Input{"--ctx", options_.ctx};
    return parse_context(options_.ctx);
  }

  // nullopt when --selfcheck found a disagreement (already reported).
  std::optional<Nf> normal_form(const NamedCtx& named, Input input) {
    current_ = std::move(input);
    auto elaborated = elaborate(named, parse_term(current_->text));
    Ctx ctx = named.ctx();
    if (options_.selfcheck) {
      Nf by_nbe = nf(ctx, elaborated.term);
      Nf by_oracle = oracle_nf(ctx, elaborated.term);
      if (!(by_nbe == by_oracle)) {
        err_ << "selfcheck failed for " << current_->label << ": normalizers disagree\n"
             << "  nbe:    " << print_nf(by_nbe, named) << '\n'
             << "  oracle: " << print_nf(by_oracle, named) << '\n';
        return std::nullopt;
      }
      return by_nbe;
    }
    if (options_.oracle) return oracle_nf(ctx, elaborated.term);
    return nf(ctx, elaborated.term);
  }

  const Options& options_;
  std::ostream& out_;
  std::ostream& err_;
  std::optional<Input> current_;
};

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normalization by evaluation for the simply typed lambda calculus", "nbe"};
  app.require_subcommand(1);
  Options options;
  app.add_flag("--oracle", options.oracle, "Normalize with the substitution-based reference normalizer");
  app.add_flag("--selfcheck", options.selfcheck, "Run both normalizers and exit 3 if they disagree");

  std::string term;
  std::string lhs;
  std::string rhs;

  auto* normalize = app.add_subcommand("normalize", "Print the long beta-eta normal form of a term");
  normalize->add_option("--ctx", options.ctx, "Typing context, e.g. \"f: b0 -> b0, x: b0\"");
  normalize->add_option("term", term, "Term to normalize")->required();

  auto* check_eq = app.add_subcommand("check-eq", "Decide beta-eta equality of two terms");
  check_eq->add_option("--ctx", options.ctx, "Typing context");
  check_eq->add_option("term1", lhs)->required();
  check_eq->add_option("term2", rhs)->required();

  auto* typecheck = app.add_subcommand("typecheck", "Print the type of a term");
  typecheck->add_option("--ctx", options.ctx, "Typing context");
  typecheck->add_option("term", term)->required();

  for (auto* sub : {normalize, check_eq, typecheck}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  Driver driver(options, out, err);
  if (normalize->parsed()) return driver.normalize(term);
  if (check_eq->parsed()) return driver.check_eq(lhs, rhs);
  return driver.typecheck(term);
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  int code = kError;
  try {
    run_with_stack(kStackBytes, [&] { code = run(argc, argv, out, err); });
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return code;
}

}  // namespace nbe
