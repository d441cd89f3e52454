// flexicolor: generate, solve, verify and brute-force flexible list coloring instances.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <thread>

#include <CLI11.hpp>

#include "flexicolor/io/generate.hpp"
#include "flexicolor/io/solve.hpp"
#include "flexicolor/oracle.hpp"

namespace fs = std::filesystem;
using namespace flexicolor;

namespace {

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    io::write_file(out, text);
  }
}

int error_exit(const Error& e) {
  std::cerr << "flexicolor: " << e.reason() << ": " << e.what() << "\n";
  if (e.reason() == "parse") return 2;
  if (e.reason() == "precondition") return 3;
  if (e.reason() == "budget") return 5;
  return 4;
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (int v : values) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flexible list coloring toolkit"};
  app.require_subcommand(1);

  std::string family, out;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("generate", "Write a fixture or random instance");
  gen->add_option("family", family, "fixture name or family spec, e.g. random-maxdeg:n=12,degree=4")->required();
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--out", out, "output file (default stdout)");
  auto* list = app.add_subcommand("families", "List fixture and family names");

  std::vector<std::string> inputs;
  std::string method, mode_name;
  std::int64_t budget = 10'000'000;
  unsigned jobs = 0;
  auto* solve = app.add_subcommand("solve", "Run a solver on one or more instances");
  solve->add_option("instances", inputs, "instance files (DIMACS accepted for graph-only input)")->required();
  solve->add_option("--method", method, "solver")->required()->check(CLI::IsMember(io::method_names()));
  solve->add_option("--independent-set", mode_name, "coloring used to pick independent requests")
      ->check(CLI::IsMember({"greedy", "brooks"}));
  solve->add_option("--budget", budget, "node/enumeration budget");
  solve->add_option("--seed", seed, "accepted for reproducibility; solvers are deterministic");
  solve->add_option("--out", out, "output file, or a directory when several instances are given");
  solve->add_option("--jobs", jobs, "worker threads for several instances (default: hardware)");

  std::string instance_path;
  auto* oracle = app.add_subcommand("oracle", "Exact optimum by exhaustive enumeration");
  oracle->add_option("instance", instance_path, "instance file")->required();
  oracle->add_option("--budget", budget, "maximum product of list sizes");
  oracle->add_option("--out", out, "output file (default stdout)");

  std::string result_path;
  auto* verify = app.add_subcommand("verify", "Re-check a result document against its instance");
  verify->add_option("instance", instance_path, "instance file")->required();
  verify->add_option("result", result_path, "result document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*list) {
      for (const auto& name : io::family_names()) std::cout << name << "\n";
      return 0;
    }
    if (*gen) {
      emit(io::serialize_instance(io::generate(family, seed)), out);
      return 0;
    }
    if (*oracle) {
      auto inst = io::load_instance(instance_path);
      auto result = oracle::optimal_satisfaction(inst.graph, inst.lists, inst.request, budget);
      std::string text = "optimum " + std::to_string(result.optimum) + "\n";
      text += "colorable " + std::string(result.witness ? "yes" : "no") + "\n";
      if (result.witness) text += "witness " + join(*result.witness) + "\n";
      text += "enumerated " + std::to_string(result.colorings_enumerated) + "\n";
      emit(text, out);
      return 0;
    }
    if (*verify) {
      auto inst = io::load_instance(instance_path);
      auto doc = io::parse_result(io::read_file(result_path));
      auto problems = io::verify_result(inst, doc);
      for (const auto& p : problems) std::cout << "problem: " << p << "\n";
      if (problems.empty()) std::cout << "ok\n";
      return problems.empty() ? 0 : 1;
    }

    io::SolveOptions options;
    options.budget = budget;
    if (!mode_name.empty()) options.mode = mode_name == "brooks" ? ColoringMode::Brooks : ColoringMode::Greedy;
    if (inputs.size() == 1) {
      auto doc = io::solve_instance(method, io::load_instance(inputs[0]), options);
      emit(io::serialize_result(doc), out);
      if (!doc.ok) std::cerr << "flexicolor: " << doc.reason << ": " << doc.message << "\n";
      return io::exit_code(doc);
    }

    // Batch: each instance is solved independently on a worker thread.
    if (!out.empty()) fs::create_directories(out);
    std::vector<std::string> texts(inputs.size());
    std::vector<int> codes(inputs.size(), 0);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i; (i = next++) < inputs.size();) {
        try {
          auto doc = io::solve_instance(method, io::load_instance(inputs[i]), options);
          texts[i] = io::serialize_result(doc);
          codes[i] = io::exit_code(doc);
        } catch (const Error& e) {
          texts[i] = "flexicolor-result 1\nmethod " + method + "\nstatus error\nreason " + e.reason() +
                     "\nmessage " + e.what() + "\n";
          codes[i] = e.reason() == "parse" ? 2 : 4;
        }
      }
    };
    const unsigned workers = std::max(1u, jobs ? jobs : std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(workers, inputs.size()); ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      if (out.empty()) {
        std::cout << "# " << inputs[i] << "\n" << texts[i];
      } else {
        io::write_file((fs::path(out) / fs::path(inputs[i]).filename().replace_extension(".result")).string(), texts[i]);
      }
    }
    return *std::max_element(codes.begin(), codes.end());
  } catch (const Error& e) {
    return error_exit(e);
  }
}
