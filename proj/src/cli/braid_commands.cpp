#include <memory>
#include <random>
#include <sstream>

#include "braidfgl/braid/garside.hpp"
#include "braidfgl/braid/io.hpp"
#include "braidfgl/braid/markov.hpp"
#include "braidfgl/braid/presentation.hpp"
#include "braidfgl/error.hpp"
#include "common.hpp"

namespace braidfgl::cli {

using namespace braidfgl::braid;

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += ' ';
    s += p;
  }
  return s;
}

std::string images_text(const Permutation& p) {
  std::string s;
  for (int v : p.images()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v);
  }
  return s;
}

struct WordInput {
  std::vector<std::string> tokens;
  std::optional<int> strands;

  // A JSON object ({"n":..,"word":[..]}) or the text form, possibly from
  // stdin via "-".
  BraidWord read(Context& ctx) const {
    std::string text = tokens.size() == 1 ? ctx.value(tokens[0]) : join(tokens);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      auto w = word_from_json(parse_json(text));
      if (strands && *strands != w.strands()) throw ParseError("--n disagrees with the word's strand count");
      return w;
    }
    return parse_text(text, strands);
  }
};

CLI::App* word_command(CLI::App& group, const char* name, const char* help, WordInput& input) {
  auto* sub = group.add_subcommand(name, help);
  sub->fallthrough();
  sub->add_option("--n", input.strands, "Strand count (optional if the word has an n= header)");
  sub->add_option("word", input.tokens, "Word as signed generator indices, or - for stdin")->required();
  return sub;
}

void emit_word(Context& ctx, const BraidWord& w) {
  if (ctx.json()) {
    ctx.emit(to_json(w));
  } else {
    ctx.out += format_text(w);
  }
}

}  // namespace

void add_braid_commands(CLI::App& app, Context& ctx) {
  auto* group = app.add_subcommand("braid", "Braid words: normal forms, equality, Markov moves");
  group->require_subcommand(1);
  group->fallthrough();

  {
    auto in = std::make_shared<WordInput>();
    word_command(*group, "reduce", "Free reduction", *in)->callback([&ctx, in] {
      ctx.action = [&ctx, in] { emit_word(ctx, free_reduce(in->read(ctx))); };
    });
  }
  {
    auto in = std::make_shared<WordInput>();
    word_command(*group, "nf", "Garside left normal form", *in)->callback([&ctx, in] {
      ctx.action = [&ctx, in] {
        auto nf = left_normal_form(in->read(ctx));
        if (ctx.json()) {
          ctx.emit(to_json(nf));
          return;
        }
        ctx.line("n=" + std::to_string(nf.strands));
        ctx.line("inf=" + std::to_string(nf.infimum));
        for (const auto& p : nf.factors) ctx.line(images_text(p));
      };
    });
  }
  {
    struct EqOptions {
      std::vector<std::string> words;
      std::optional<int> strands;
      int random_pairs = 0;
      std::size_t length = 20;
      int insertions = 3;
    };
    auto o = std::make_shared<EqOptions>();
    auto* sub = group->add_subcommand("eq", "Decide equality of two words, or test random relator insertions");
    sub->fallthrough();
    sub->add_option("--n", o->strands, "Strand count");
    sub->add_option("words", o->words, "Two words");
    sub->add_option("--random-pairs", o->random_pairs, "Check this many seeded (w, scrambled w) pairs instead")
        ->check(CLI::Range(1, 1000000));
    sub->add_option("--length", o->length, "Random word length")->capture_default_str();
    sub->add_option("--insertions", o->insertions, "Relator insertions per pair")->capture_default_str();
    sub->callback([&ctx, o] {
      ctx.action = [&ctx, o] {
        if (o->random_pairs > 0) {
          if (!o->words.empty()) throw UsageError("give either two words or --random-pairs");
          int n = o->strands.value_or(4);
          if (n < 2) throw UsageError("--random-pairs needs n >= 2");
          std::mt19937_64 rng(ctx.seed);
          int equal = 0;
          for (int i = 0; i < o->random_pairs; ++i) {
            auto w = random_word(n, o->length, rng);
            if (words_equal(w, scramble(w, o->insertions, true, rng))) ++equal;
          }
          if (ctx.json()) {
            ctx.emit({{"n", n}, {"pairs", o->random_pairs}, {"equal", equal}, {"seed", ctx.seed}, {"length", o->length}});
          } else {
            ctx.line("n=" + std::to_string(n) + " pairs=" + std::to_string(o->random_pairs) +
                     " equal=" + std::to_string(equal) + " seed=" + std::to_string(ctx.seed));
          }
          if (equal != o->random_pairs) throw InternalError("a scrambled word was judged different");
          return;
        }
        if (o->words.size() != 2) throw UsageError("eq needs exactly two words");
        WordInput a{{o->words[0]}, o->strands}, b{{o->words[1]}, o->strands};
        bool eq = words_equal(a.read(ctx), b.read(ctx));
        if (ctx.json()) {
          ctx.emit({{"equal", eq}});
        } else {
          ctx.line(eq ? "true" : "false");
        }
      };
    });
  }
  {
    auto in = std::make_shared<WordInput>();
    word_command(*group, "perm", "Underlying permutation", *in)->callback([&ctx, in] {
      ctx.action = [&ctx, in] {
        auto p = permutation_of(in->read(ctx));
        if (ctx.json()) {
          ctx.emit(to_json(p));
        } else {
          ctx.line(images_text(p));
        }
      };
    });
  }
  {
    auto in = std::make_shared<WordInput>();
    word_command(*group, "pure", "Is the braid pure?", *in)->callback([&ctx, in] {
      ctx.action = [&ctx, in] {
        bool pure = is_pure(in->read(ctx));
        if (ctx.json()) {
          ctx.emit({{"pure", pure}});
        } else {
          ctx.line(pure ? "true" : "false");
        }
      };
    });
  }
  {
    auto in = std::make_shared<WordInput>();
    word_command(*group, "closure", "Components and exponent sum of the closure", *in)->callback([&ctx, in] {
      ctx.action = [&ctx, in] {
        auto c = closure_summary(in->read(ctx));
        if (ctx.json()) {
          ctx.emit(to_json(c));
        } else {
          ctx.line("components=" + std::to_string(c.components));
          ctx.line("exponent_sum=" + std::to_string(c.exponent_sum));
          ctx.line("strands=" + std::to_string(c.strands));
        }
      };
    });
  }
  {
    struct MarkovOptions {
      WordInput in;
      std::optional<std::string> conjugate;
      std::optional<int> stabilize;
      bool destabilize = false;
    };
    auto o = std::make_shared<MarkovOptions>();
    auto* sub = word_command(*group, "markov", "Apply one Markov move", o->in);
    auto* conj = sub->add_option("--conjugate", o->conjugate, "Conjugate by this word (g w g^-1)");
    auto* stab = sub->add_option("--stabilize", o->stabilize, "Stabilize with sign +1 or -1")
                     ->check(CLI::IsMember({-1, 1}));
    auto* destab = sub->add_flag("--destabilize", o->destabilize, "Remove a final sigma_(n-1)^(+-1)");
    conj->excludes(stab)->excludes(destab);
    stab->excludes(destab);
    sub->callback([&ctx, o] {
      ctx.action = [&ctx, o] {
        auto w = o->in.read(ctx);
        MarkovMove move;
        if (o->conjugate) {
          WordInput g{{*o->conjugate}, w.strands()};
          move = Conjugate{g.read(ctx)};
        } else if (o->stabilize) {
          move = Stabilize{*o->stabilize};
        } else if (o->destabilize) {
          move = Destabilize{};
        } else {
          throw UsageError("markov needs --conjugate, --stabilize or --destabilize");
        }
        emit_word(ctx, markov_move(w, move));
      };
    });
  }
  {
    auto in = std::make_shared<WordInput>();
    word_command(*group, "cobordism", "Endpoints of the braid cobordism", *in)->callback([&ctx, in] {
      ctx.action = [&ctx, in] {
        auto c = braid_cobordism(in->read(ctx));
        if (ctx.json()) {
          ctx.emit(to_json(c));
          return;
        }
        ctx.line("intervals=" + std::to_string(c.intervals));
        for (std::size_t i = 0; i < c.top.size(); ++i) {
          auto pt = [](const BraidCobordism::Point& p) {
            return "(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + "," + std::to_string(p[2]) + ")";
          };
          ctx.line(pt(c.top[i]) + " -> " + pt(c.bottom[i]));
        }
      };
    });
  }
}

}  // namespace braidfgl::cli
