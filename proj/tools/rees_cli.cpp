#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "rees/cli.hpp"

int main(int argc, char** argv) {
  using rees::cli::Json;
  CLI::App app{"Rees algebra computations for height-two ideals of binary forms"};
  std::string command, input, format = "json";
  std::uint32_t prime = 0;
  rees::cli::Options opt;
  app.add_option("command", command, "validate | adegrees | generators | classify-sextic | andy | oracle | verify")
      ->required()
      ->check(CLI::IsMember(rees::cli::commands()));
  app.add_option("--input", input, "input JSON file")->required()->check(CLI::ExistingFile);
  app.add_option("--prime", prime, "override the prime of the input file");
  app.add_option("--imax", opt.imax, "largest x,y-degree examined (default delta)");
  app.add_option("--jmax", opt.jmax, "largest T-degree examined")->check(CLI::Range(0, 40));
  app.add_option("--seed", opt.seed, "seed for randomized checks in verify");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  CLI11_PARSE(app, argc, argv);

  rees::cli::Report rep;
  try {
    std::ifstream in(input);
    Json j = Json::parse(in);
    rees::RawPhi raw = rees::cli::parse_input(j, prime ? std::optional<std::uint32_t>(prime) : std::nullopt);
    rep = rees::cli::run(command, raw, opt);
  } catch (const std::exception& e) {
    rep.exit_code = 2;
    rep.body = Json{{"command", command}, {"error", std::string("input: ") + e.what()}};
  }
  if (format == "json")
    std::cout << rep.body.dump(2) << "\n";
  else
    std::cout << rees::cli::render_text(rep.body);
  return rep.exit_code;
}
