#include <cstdio>
#include <memory>

#include "braidfgl/error.hpp"
#include "braidfgl/kz/io.hpp"
#include "common.hpp"

namespace braidfgl::cli {

using namespace braidfgl::kz;

namespace {

struct SystemInput {
  std::optional<std::string> positional;
  std::optional<std::string> file;

  InfinitesimalSystem read(Context& ctx) const {
    if (positional && file) throw UsageError("give the system once, either --file or positionally");
    const auto& path = file ? file : positional;
    if (!path) throw UsageError("missing system (--file PATH or - for stdin)");
    return system_from_json(parse_json(ctx.file(*path)));
  }
};

CLI::App* system_command(CLI::App& group, const char* name, const char* help, SystemInput& input) {
  auto* sub = group.add_subcommand(name, help);
  sub->fallthrough();
  sub->add_option("system", input.positional, "System JSON file, or - for stdin");
  sub->add_option("--file", input.file, "System JSON file, or - for stdin");
  return sub;
}

std::string pair_text(PairIndex p) { return std::to_string(p.i) + "," + std::to_string(p.j); }

void report_text(Context& ctx, const RelationReport& r) {
  ctx.line(std::string("satisfied: ") + (r.satisfies_triangle_form() ? "true" : "false"));
  ctx.line(std::string("flat: ") + (r.flat() ? "true" : "false"));
  ctx.line("max_residual: " + to_string(r.max_residual));
  for (const auto& v : r.commuting) {
    ctx.line("commuting (" + pair_text(v.first) + ") (" + pair_text(v.second) + ") residual " + to_string(v.residual));
  }
  auto triple = [](const TripleViolation& v) {
    return "(" + std::to_string(v.i) + "," + std::to_string(v.j) + "," + std::to_string(v.k) + ") residual " +
           to_string(v.residual);
  };
  for (const auto& v : r.triangle) ctx.line("triangle " + triple(v));
  for (const auto& v : r.flatness) ctx.line("flatness " + triple(v));
}

std::string complex_text(std::complex<double> z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

}  // namespace

void add_kz_commands(CLI::App& app, Context& ctx) {
  auto* group = app.add_subcommand("kz", "Infinitesimal braid relations and KZ holonomy");
  group->require_subcommand(1);
  group->fallthrough();

  {
    auto in = std::make_shared<SystemInput>();
    system_command(*group, "check", "Check the infinitesimal braid relations exactly", *in)->callback([&ctx, in] {
      ctx.action = [&ctx, in] {
        auto report = check_infinitesimal_relations(in->read(ctx), ctx.threads);
        if (ctx.json()) {
          ctx.emit(to_json(report));
        } else {
          report_text(ctx, report);
        }
      };
    });
  }
  {
    auto in = std::make_shared<SystemInput>();
    system_command(*group, "curvature", "Does the KZ curvature vanish?", *in)->callback([&ctx, in] {
      ctx.action = [&ctx, in] {
        auto v = curvature_is_zero(in->read(ctx));
        if (ctx.json()) {
          ctx.emit({{"flat", v.flat}, {"witness", to_json(v.witness)}});
          return;
        }
        ctx.line(v.flat ? "flat" : "not flat");
        if (!v.flat) report_text(ctx, v.witness);
      };
    });
  }
  {
    struct Options {
      SystemInput in;
      std::string point;
    };
    auto o = std::make_shared<Options>();
    auto* sub = system_command(*group, "sample", "Exact curvature residual at a configuration point", o->in);
    sub->add_option("--point", o->point, "JSON list of {\"re\",\"im\"}, or @file")->required();
    sub->callback([&ctx, o] {
      ctx.action = [&ctx, o] {
        auto sys = o->in.read(ctx);
        auto point = configuration_point_from_json(parse_json(ctx.value_or_file(o->point)));
        auto r = numeric_curvature_sample(sys, point);
        if (ctx.json()) {
          ctx.emit({{"residual", to_string(r)}, {"zero", r == 0}});
        } else {
          ctx.line(to_string(r));
        }
      };
    });
  }
  {
    struct Options {
      SystemInput in;
      std::string rho;
    };
    auto o = std::make_shared<Options>();
    auto* sub = system_command(*group, "equivariance", "S_n-equivariance of the system under rho", o->in);
    sub->add_option("--rho", o->rho, "Matrices of the adjacent transpositions (JSON or @file)")->required();
    sub->callback([&ctx, o] {
      ctx.action = [&ctx, o] {
        auto sys = o->in.read(ctx);
        auto rho = rho_from_json(parse_json(ctx.value_or_file(o->rho)), sys.points());
        bool ok = sn_equivariance_check(sys, rho);
        if (ctx.json()) {
          ctx.emit({{"equivariant", ok}});
        } else {
          ctx.line(ok ? "true" : "false");
        }
      };
    });
  }
  {
    struct Options {
      SystemInput in;
      std::string loop;
      std::size_t steps = 1024;
      bool allow_nonflat = false;
      double min_clearance = 1e-6;
    };
    auto o = std::make_shared<Options>();
    auto* sub = system_command(*group, "holonomy", "Parallel transport around a loop (RK4)", o->in);
    sub->add_option("--loop", o->loop, "circle:i,j,r | offset:i,r | polyline:@file")->required();
    sub->add_option("--steps", o->steps, "RK4 steps")->capture_default_str();
    sub->add_flag("--allow-nonflat", o->allow_nonflat, "Integrate even if the system is not flat");
    sub->add_option("--min-clearance", o->min_clearance, "Relative distance to the diagonals")
        ->capture_default_str();
    sub->callback([&ctx, o] {
      ctx.action = [&ctx, o] {
        auto sys = o->in.read(ctx);
        auto loop = parse_loop_spec(o->loop, sys.points());
        auto r = holonomy(sys, loop, o->steps, HolonomyOptions{o->allow_nonflat, o->min_clearance});
        if (ctx.json()) {
          ctx.emit(to_json(r));
          return;
        }
        for (Eigen::Index i = 0; i < r.matrix.rows(); ++i) {
          std::string row;
          for (Eigen::Index j = 0; j < r.matrix.cols(); ++j) {
            if (j > 0) row += ' ';
            row += complex_text(r.matrix(i, j));
          }
          ctx.line(row);
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3e", r.error_estimate);
        ctx.line("steps=" + std::to_string(r.step_count) + " error_estimate=" + buf);
      };
    });
  }
  {
    struct Options {
      std::string kind = "transposition";
      int n = 3;
      std::size_t d = 2;
      std::string lambda = "1/2";
    };
    auto o = std::make_shared<Options>();
    auto* sub = group->add_subcommand("example", "Emit a sample system as JSON");
    sub->fallthrough();
    sub->add_option("--kind", o->kind, "transposition or scalar")
        ->check(CLI::IsMember({"transposition", "scalar"}))
        ->capture_default_str();
    sub->add_option("--n", o->n, "Number of points")->capture_default_str();
    sub->add_option("--d", o->d, "Local dimension (transposition)")->capture_default_str();
    sub->add_option("--lambda", o->lambda, "Common value of A_ij (scalar)")->capture_default_str();
    sub->callback([&ctx, o] {
      ctx.action = [&ctx, o] {
        if (o->kind == "transposition") {
          ctx.emit(to_json(transposition_system(o->n, o->d)));
          return;
        }
        std::map<PairIndex, Rational> lambdas;
        auto value = parse_rational(o->lambda);
        for (auto p : all_pairs(o->n)) lambdas.emplace(p, value);
        ctx.emit(to_json(scalar_system(o->n, lambdas)));
      };
    });
  }
}

}  // namespace braidfgl::cli
