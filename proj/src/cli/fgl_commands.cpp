#include <memory>

#include "braidfgl/error.hpp"
#include "braidfgl/fgl/io.hpp"
#include "braidfgl/fgl/lazard.hpp"
#include "common.hpp"

namespace braidfgl::cli {

using namespace braidfgl::fgl;

namespace {

bool looks_like_json(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '{';
}

void check_degree(const Context& ctx, int degree) {
  if (degree > ctx.max_degree) {
    throw LimitError("degree " + std::to_string(degree) + " exceeds --max-degree " +
                     std::to_string(ctx.max_degree));
  }
}

// A law given as text or bud JSON. The degree comes from --degree, else from
// the JSON, else from the polynomial itself.
Bud read_law(Context& ctx, const std::string& arg, std::optional<int> degree) {
  auto text = ctx.value(arg);
  Bud bud;
  if (looks_like_json(text)) {
    bud = bud_from_json(parse_json(text));
    if (degree) bud = Bud::make(bud.law, *degree);
  } else {
    auto p = parse_polynomial(text);
    bud = Bud::make(p, degree.value_or(std::max(1, p.formal_degree())));
  }
  check_degree(ctx, bud.degree);
  return bud;
}

LogSeries read_log(Context& ctx, const std::string& arg, std::optional<int> degree) {
  auto text = ctx.value(arg);
  LogSeries log;
  if (looks_like_json(text)) {
    log = log_from_json(parse_json(text));
  } else {
    auto p = parse_polynomial(text);
    log = LogSeries{std::max(1, p.formal_degree()), p};
  }
  if (degree) log = LogSeries{*degree, log.series.truncated(*degree)};
  check_degree(ctx, log.degree);
  return log;
}

LazardState read_stages(Context& ctx, int stages) { return universal_bud(stages, ctx.max_stages); }

void emit_polynomial(Context& ctx, const Polynomial& p, int degree) {
  if (ctx.json()) {
    auto j = to_json(p);
    j["degree"] = degree;
    ctx.emit(j);
  } else {
    ctx.line(to_string(p));
  }
}

}  // namespace

void add_fgl_commands(CLI::App& app, Context& ctx) {
  auto* group = app.add_subcommand("fgl", "Formal group laws: buds, the Lazard tower, logarithms");
  group->require_subcommand(1);
  group->fallthrough();

  {
    auto n = std::make_shared<int>(2);
    auto* sub = group->add_subcommand("cocycle", "Symmetric 2-cocycle C_n");
    sub->fallthrough();
    sub->add_option("n", *n, "Degree (>= 2)")->required();
    sub->callback([&ctx, n] {
      ctx.action = [&ctx, n] {
        check_degree(ctx, *n);
        auto c = sym_cocycle(*n);
        if (ctx.json()) {
          auto j = to_json(c);
          j["degree"] = *n;
          ctx.emit({{"n", *n}, {"divisor", cocycle_divisor(*n).get_str()}, {"cocycle", j}});
        } else {
          ctx.line(to_string(c));
        }
      };
    });
  }
  {
    struct Options {
      std::string law;
      std::optional<int> degree;
    };
    auto o = std::make_shared<Options>();
    auto* sub = group->add_subcommand("defects", "Associativity, commutativity and unit defects");
    sub->fallthrough();
    sub->add_option("law", o->law, "Law F(x, y), bud JSON, or - for stdin")->required();
    sub->add_option("--degree", o->degree, "Bud degree m (terms of degree > m are ignored)");
    sub->callback([&ctx, o] {
      ctx.action = [&ctx, o] {
        auto bud = read_law(ctx, o->law, o->degree);
        auto d = bud_defects(bud.law, bud.degree);
        if (ctx.json()) {
          auto j = to_json(d);
          j["degree"] = bud.degree;
          ctx.emit(j);
        } else {
          ctx.line("associativity: " + to_string(d.associativity));
          ctx.line("commutativity: " + to_string(d.commutativity));
          ctx.line("unit: " + to_string(d.unit));
        }
      };
    });
  }
  {
    auto stages = std::make_shared<int>(1);
    auto* sub = group->add_subcommand("universal", "Universal law f_q over Z[a1..aq]");
    sub->fallthrough();
    sub->add_option("--stages", *stages, "Stage q")->required();
    sub->callback([&ctx, stages] {
      ctx.action = [&ctx, stages] {
        auto s = read_stages(ctx, *stages);
        if (ctx.json()) {
          ctx.emit(to_json(s));
        } else {
          ctx.line(to_string(s.law.law));
        }
      };
    });
  }
  {
    struct Options {
      std::optional<std::string> law;
      std::optional<int> degree;
      std::optional<int> stages;
    };
    auto o = std::make_shared<Options>();
    auto* sub = group->add_subcommand("log", "Logarithm of a bud");
    sub->fallthrough();
    auto* law = sub->add_option("law", o->law, "Law F(x, y), bud JSON, or - for stdin");
    auto* stages = sub->add_option("--stages", o->stages, "Use the universal law of this stage");
    law->excludes(stages);
    sub->add_option("--degree", o->degree, "Bud degree m");
    sub->callback([&ctx, o] {
      ctx.action = [&ctx, o] {
        LogSeries log;
        if (o->stages) {
          log = read_stages(ctx, *o->stages).log;
        } else if (o->law) {
          log = log_of_bud(read_law(ctx, *o->law, o->degree));
        } else {
          throw UsageError("log needs a law or --stages");
        }
        if (ctx.json()) {
          ctx.emit(to_json(log));
        } else {
          ctx.line(to_string(log.series));
        }
      };
    });
  }
  {
    struct Options {
      std::string log;
      std::optional<int> degree;
    };
    auto o = std::make_shared<Options>();
    auto* sub = group->add_subcommand("exp", "Law phi^-1(phi(x) + phi(y)) from a logarithm in t");
    sub->fallthrough();
    sub->add_option("log", o->log, "Series in t, log JSON, or - for stdin")->required();
    sub->add_option("--degree", o->degree, "Truncation degree");
    sub->callback([&ctx, o] {
      ctx.action = [&ctx, o] {
        auto bud = fgl_from_log(read_log(ctx, o->log, o->degree));
        if (ctx.json()) {
          ctx.emit(to_json(bud));
        } else {
          ctx.line(to_string(bud.law));
        }
      };
    });
  }
  {
    auto stages = std::make_shared<int>(1);
    auto* sub = group->add_subcommand("mishchenko", "Classes [CP^k] = (k+1) m_k of the universal logarithm");
    sub->fallthrough();
    sub->add_option("--stages", *stages, "Stage q")->required();
    sub->callback([&ctx, stages] {
      ctx.action = [&ctx, stages] {
        auto m = mishchenko_classes(read_stages(ctx, *stages));
        if (ctx.json()) {
          ctx.emit(to_json(m));
          return;
        }
        for (std::size_t k = 0; k < m.classes.size(); ++k) {
          ctx.line("[CP^" + std::to_string(k) + "] = " + to_string(m.classes[k]));
        }
      };
    });
  }
  {
    struct Options {
      std::string law;
      std::string a;
      std::string b;
      std::optional<int> degree;
      std::optional<int> truncation;
    };
    auto o = std::make_shared<Options>();
    auto* sub = group->add_subcommand("quillen", "First Chern class of a tensor product, F(a, b)");
    sub->fallthrough();
    sub->add_option("law", o->law, "Law F(x, y), bud JSON, or - for stdin")->required();
    sub->add_option("--a", o->a, "c1 of the first line bundle")->required();
    sub->add_option("--b", o->b, "c1 of the second line bundle")->required();
    sub->add_option("--degree", o->degree, "Bud degree of the law");
    sub->add_option("--truncate", o->truncation, "Truncation degree (default: the bud degree)");
    sub->callback([&ctx, o] {
      ctx.action = [&ctx, o] {
        auto bud = read_law(ctx, o->law, o->degree);
        int m = o->truncation.value_or(bud.degree);
        auto c = quillen_c1_tensor(bud, parse_polynomial(o->a), parse_polynomial(o->b), m);
        emit_polynomial(ctx, c, m);
      };
    });
  }
  {
    struct Options {
      std::optional<std::string> law;
      std::optional<int> degree;
      std::optional<int> stages;
      std::optional<std::string> assign;
      std::optional<std::string> target;
    };
    auto o = std::make_shared<Options>();
    auto* sub = group->add_subcommand("specialize", "Substitute values for the generators, or classify a law");
    sub->fallthrough();
    auto* law = sub->add_option("law", o->law, "Law F(x, y), bud JSON, or - for stdin");
    auto* stages = sub->add_option("--stages", o->stages, "Use the universal law of this stage");
    law->excludes(stages);
    sub->add_option("--degree", o->degree, "Bud degree of the law");
    auto* assign = sub->add_option("--assign", o->assign, "Assignment such as \"a1=u, a2=0\"");
    auto* target = sub->add_option("--target", o->target, "Solve for the assignment mapping f_q to this law");
    assign->excludes(target);
    target->needs(stages);
    sub->callback([&ctx, o] {
      ctx.action = [&ctx, o] {
        if (o->target) {
          auto state = read_stages(ctx, *o->stages);
          auto goal = read_law(ctx, *o->target, o->degree.value_or(state.law.degree));
          auto assignment = classifying_assignment(state, goal);
          if (ctx.json()) {
            ctx.emit(to_json(assignment));
            return;
          }
          for (auto& [k, v] : assignment) ctx.line("a" + std::to_string(k) + " = " + to_string(v));
          return;
        }
        if (!o->assign) throw UsageError("specialize needs --assign or --target");
        Bud bud;
        if (o->stages) {
          bud = read_stages(ctx, *o->stages).law;
        } else if (o->law) {
          bud = read_law(ctx, *o->law, o->degree);
        } else {
          throw UsageError("specialize needs a law or --stages");
        }
        auto out = specialize(bud, parse_assignment(ctx.value_or_file(*o->assign)));
        if (ctx.json()) {
          ctx.emit(to_json(out));
        } else {
          ctx.line(to_string(out.law));
        }
      };
    });
  }
}

}  // namespace braidfgl::cli
