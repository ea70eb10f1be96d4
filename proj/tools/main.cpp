#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "topocat/adjunction.hpp"
#include "topocat/campaign.hpp"
#include "topocat/continuity.hpp"
#include "topocat/json_io.hpp"
#include "topocat/space.hpp"

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

void emit(const topocat::Json& j) { std::cout << j.dump() << "\n"; }

topocat::Mask parse_set_flag(const topocat::FiniteSpace& space, const std::string& arg) {
  if (arg.empty()) return 0;
  const auto labels = topocat::effective_labels(space);
  topocat::Mask mask = 0;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = arg.find(',', start);
    const std::string part =
        comma == std::string::npos ? arg.substr(start) : arg.substr(start, comma - start);
    int idx = -1;
    for (std::size_t p = 0; p < labels.size(); ++p) {
      if (labels[p] == part) {
        idx = static_cast<int>(p);
        break;
      }
    }
    if (idx < 0) {
      throw topocat::Error(topocat::ErrorKind::ParseError,
                           "unknown point label \"" + part + "\" in --set");
    }
    mask |= topocat::Mask{1} << idx;
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return mask;
}

std::string pair_text(const topocat::SetFunction& fn,
                      const std::pair<topocat::Subset, topocat::Subset>& w) {
  return "(" + topocat::render_subset(fn.domain, w.first.mask) + ", " +
         topocat::render_subset(fn.codomain, w.second.mask) + ")";
}

void print_functor_table(const char* title, const topocat::MonotoneMap& map) {
  std::cout << title << ":\n";
  const auto& family = map.source.closed_family();
  for (topocat::Mask u : family) {
    std::cout << "  " << topocat::render_subset(map.source, u) << " -> "
              << topocat::render_subset(map.target, map.apply_mask(u)) << "\n";
  }
}

int run_validate(const std::string& path, bool as_json) {
  const topocat::FiniteSpace space = topocat::space_from_json(topocat::load_json_file(path));
  if (as_json) {
    emit(topocat::space_to_json(space));
  } else {
    std::cout << space.point_count() << " points, " << space.family_size() << " closed sets\n";
    std::cout << "closed:";
    for (topocat::Mask m : space.closed_family()) {
      std::cout << ' ' << topocat::render_subset(space, m);
    }
    std::cout << "\n";
  }
  return 0;
}

int run_closure(const std::string& path, const std::string& set_arg, bool as_json) {
  const topocat::FiniteSpace space = topocat::space_from_json(topocat::load_json_file(path));
  const topocat::Mask closed = space.closure_mask(parse_set_flag(space, set_arg));
  if (as_json) {
    topocat::Json j;
    j["closure"] = topocat::subset_labels(space, closed);
    emit(j);
  } else {
    std::cout << join(topocat::subset_labels(space, closed), ",") << "\n";
  }
  return 0;
}

int run_continuity(const std::string& path, bool as_json) {
  const topocat::SetFunction fn = topocat::set_function_from_json(topocat::load_json_file(path));
  const topocat::ContinuityResult result = topocat::is_continuous(fn);
  if (as_json) {
    topocat::Json j;
    j["continuous"] = result.continuous;
    if (result.witness) j["witness"] = topocat::subset_labels(fn.codomain, result.witness->mask);
    emit(j);
  } else {
    std::cout << "continuous: " << (result.continuous ? "yes" : "no") << "\n";
    if (result.witness) {
      std::cout << "witness V = " << topocat::render_subset(fn.codomain, result.witness->mask)
                << "\n";
    }
  }
  return result.continuous ? 0 : 1;
}

int run_adjoint(const std::string& path, bool as_json) {
  const topocat::SetFunction fn = topocat::set_function_from_json(topocat::load_json_file(path));
  const topocat::AdjunctionVerdict verdict =
      topocat::is_adjoint(topocat::induced_direct(fn), topocat::induced_inverse(fn));
  if (as_json) {
    emit(topocat::verdict_to_json(verdict, fn.domain, fn.codomain));
  } else {
    std::cout << "adjoint: " << (verdict.adjoint ? "yes" : "no") << "\n";
    if (verdict.witness) {
      std::cout << "witness (U, V) = " << pair_text(fn, *verdict.witness) << "\n";
    }
  }
  return verdict.adjoint ? 0 : 1;
}

int run_induced(const std::string& path, bool as_json) {
  const topocat::SetFunction fn = topocat::set_function_from_json(topocat::load_json_file(path));
  const topocat::MonotoneMap direct = topocat::induced_direct(fn);
  const topocat::MonotoneMap inverse = topocat::induced_inverse(fn);
  if (as_json) {
    topocat::Json j;
    j["direct"] = topocat::monotone_map_to_json(direct);
    j["inverse"] = topocat::monotone_map_to_json(inverse);
    emit(j);
  } else {
    print_functor_table("direct induced functor", direct);
    print_functor_table("inverse induced functor", inverse);
  }
  return 0;
}

int run_verify_one(const std::string& path, bool as_json) {
  const topocat::SetFunction fn = topocat::set_function_from_json(topocat::load_json_file(path));
  const topocat::TheoremReport report = topocat::verify_theorem(fn);
  if (as_json) {
    emit(topocat::theorem_report_to_json(report, fn));
  } else {
    std::cout << "continuous: " << (report.continuous ? "yes" : "no") << "\n";
    std::cout << "adjoint: " << (report.adjoint ? "yes" : "no") << "\n";
    std::cout << "agree: " << (report.agree ? "yes" : "no") << "\n";
    if (report.continuity_witness) {
      std::cout << "witness V = "
                << topocat::render_subset(fn.codomain, report.continuity_witness->mask) << "\n";
    }
    if (report.adjunction_witness) {
      std::cout << "witness (U, V) = " << pair_text(fn, *report.adjunction_witness) << "\n";
    }
  }
  return report.continuous ? 0 : 1;
}

int run_campaign_cmd(int max_points, bool include_four, int threads, std::size_t gallery,
                     bool as_json) {
  topocat::CampaignConfig config;
  config.max_points = max_points;
  config.include_four = include_four;
  config.threads = threads;
  const topocat::CampaignReport report = topocat::run_campaign(config);
  std::vector<topocat::GalleryEntry> entries;
  if (gallery > 0) entries = topocat::find_discontinuous_gallery(max_points, gallery);

  if (as_json) {
    topocat::Json j = topocat::campaign_report_to_json(report);
    if (gallery > 0) j["gallery"] = topocat::gallery_to_json(entries);
    emit(j);
  } else {
    std::cout << "max points: " << report.max_points << "\n";
    std::cout << "spaces checked:";
    for (std::size_t n = 0; n < report.spaces_checked.size(); ++n) {
      std::cout << " n=" << n << ":" << report.spaces_checked[n];
    }
    std::cout << "\n";
    std::cout << "blocks (domain, codomain, functions, continuous):\n";
    for (const auto& block : report.blocks) {
      std::cout << "  " << block.domain_points << " " << block.codomain_points << " "
                << block.functions_checked << " " << block.continuous_count << "\n";
    }
    std::cout << "functions checked: " << report.functions_checked << "\n";
    std::cout << "continuous: " << report.continuous_count << "\n";
    std::cout << "mismatches: " << report.mismatches.size() << "\n";
    char elapsed[64];
    std::snprintf(elapsed, sizeof elapsed, "%.2f", report.elapsed_seconds);
    std::cout << "elapsed: " << elapsed << "s\n";
    if (gallery > 0) {
      std::cout << "gallery:\n";
      for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& entry = entries[i];
        const auto dom = topocat::effective_labels(entry.fn.domain);
        const auto cod = topocat::effective_labels(entry.fn.codomain);
        std::string map_desc;
        for (int p = 0; p < entry.fn.domain.point_count(); ++p) {
          if (p > 0) map_desc += ", ";
          map_desc += dom[static_cast<std::size_t>(p)] + "->" +
                      cod[static_cast<std::size_t>(entry.fn.mapping[static_cast<std::size_t>(p)])];
        }
        std::cout << "  [" << i << "] map: " << map_desc << "\n";
        std::cout << "      domain closed:";
        for (topocat::Mask m : entry.fn.domain.closed_family()) {
          std::cout << ' ' << topocat::render_subset(entry.fn.domain, m);
        }
        std::cout << "\n      codomain closed:";
        for (topocat::Mask m : entry.fn.codomain.closed_family()) {
          std::cout << ' ' << topocat::render_subset(entry.fn.codomain, m);
        }
        std::cout << "\n";
        std::cout << "      witness V = "
                  << topocat::render_subset(entry.fn.codomain, entry.continuity_witness.mask)
                  << "\n";
        std::cout << "      constructed U = "
                  << topocat::render_subset(entry.fn.domain, entry.constructed_u.mask) << "\n";
      }
    }
  }
  return report.mismatches.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite topological spaces, their closed-set functors, and adjointness"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON on stdout");

  std::string validate_file;
  auto* cmd_validate = app.add_subcommand("validate", "check the closed-set axioms of a space");
  cmd_validate->add_option("file", validate_file, "space JSON file")->required();

  std::string closure_file;
  std::string closure_set;
  auto* cmd_closure = app.add_subcommand("closure", "closure of a subset");
  cmd_closure->add_option("file", closure_file, "space JSON file")->required();
  cmd_closure
      ->add_option("--set", closure_set, "comma-separated point labels; empty for the empty set")
      ->required();

  std::string continuity_file;
  auto* cmd_continuity = app.add_subcommand("continuity", "is the function continuous");
  cmd_continuity->add_option("file", continuity_file, "function JSON file")->required();

  std::string adjoint_file;
  auto* cmd_adjoint = app.add_subcommand("adjoint", "is the induced functor pair adjoint");
  cmd_adjoint->add_option("file", adjoint_file, "function JSON file")->required();

  std::string induced_file;
  auto* cmd_induced = app.add_subcommand("induced", "print both induced functor tables");
  cmd_induced->add_option("file", induced_file, "function JSON file")->required();

  std::string verify_file;
  auto* cmd_verify = app.add_subcommand("verify-one", "full continuity/adjointness verdict");
  cmd_verify->add_option("file", verify_file, "function JSON file")->required();

  int max_points = 3;
  bool include_four = false;
  int threads = 0;
  std::size_t gallery = 0;
  auto* cmd_campaign =
      app.add_subcommand("campaign", "check every function between all small spaces");
  cmd_campaign->add_option("--max-points", max_points, "largest space size (default 3)");
  cmd_campaign->add_flag("--include-4", include_four, "allow --max-points 4");
  cmd_campaign->add_option("--threads", threads, "worker threads (0 = all cores)");
  cmd_campaign->add_option("--gallery", gallery,
                           "also list the first K discontinuous functions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_validate) return run_validate(validate_file, as_json);
    if (*cmd_closure) return run_closure(closure_file, closure_set, as_json);
    if (*cmd_continuity) return run_continuity(continuity_file, as_json);
    if (*cmd_adjoint) return run_adjoint(adjoint_file, as_json);
    if (*cmd_induced) return run_induced(induced_file, as_json);
    if (*cmd_verify) return run_verify_one(verify_file, as_json);
    if (*cmd_campaign) {
      return run_campaign_cmd(max_points, include_four, threads, gallery, as_json);
    }
  } catch (const topocat::Error& e) {
    if (as_json) {
      emit(topocat::error_to_json(e));
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
