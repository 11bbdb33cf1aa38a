#include "toric/cli.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "toric/json_io.hpp"

namespace toric::cli {

namespace {

using json_io::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::Io, "cannot open " + path);
  buffer << file.rdbuf();
  return buffer.str();
}

Json load_json(const std::string& path, std::istream& in) { return json_io::parse(read_source(path, in)); }

/// Inline JSON when the argument looks like a document, otherwise a path.
Json inline_or_file(const std::string& arg, std::istream& in) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return json_io::parse(arg);
  return load_json(arg, in);
}

CircleDirection parse_xi(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
    throw UsageError("--xi expects two integers separated by a comma, e.g. --xi 1,0");
  try {
    return CircleDirection(IntVec2(parse_integer(text.substr(0, comma)), parse_integer(text.substr(comma + 1))));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidRational) throw UsageError("--xi: " + std::string(e.what()));
    throw;
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Delzant polygons, Hirzebruch trapezoids and maximal tori in Ham(M)", "toric"};
  app.require_subcommand(1);

  std::string polygon_path, second_path, manifold_arg, fixed_arg, xi_text, form_name = "hyperbolic";
  std::string a_text, b_text, m_text;
  unsigned bound = kDefaultAutomorphismBound;
  bool dot = false;

  auto* verify = app.add_subcommand("verify", "Check the Delzant condition");
  verify->add_option("polygon", polygon_path, "Polygon JSON file, or - for stdin")->required();

  auto* classify = app.add_subcommand("classify", "Identify a Delzant quadrilateral as a Hirzebruch trapezoid");
  classify->add_option("polygon", polygon_path, "Polygon JSON file, or - for stdin")->required();

  auto* standard = app.add_subcommand("standard", "Standard Hirzebruch trapezoid for (a, b, m)");
  standard->add_option("--a", a_text, "Average width (rational)")->required();
  standard->add_option("--b", b_text, "Height (rational)")->required();
  standard->add_option("--m", m_text, "Nonnegative integer")->required();

  auto* count = app.add_subcommand("count-tori", "Number of conjugacy classes of maximal tori");
  count->add_option("--manifold", manifold_arg, "Manifold JSON (inline or file)")->required();

  auto* enumerate = app.add_subcommand("enumerate-tori", "Trapezoid parameters of each torus class");
  enumerate->add_option("--manifold", manifold_arg, "Manifold JSON (inline or file)")->required();

  auto* graph = app.add_subcommand("graph", "Labeled graph of a circle subaction");
  graph->add_option("polygon", polygon_path, "Polygon JSON file, or - for stdin")->required();
  graph->add_option("--xi", xi_text, "Primitive circle direction x,y")->required();
  graph->add_flag("--dot", dot, "Emit Graphviz instead of JSON");

  auto* betti = app.add_subcommand("betti", "Betti numbers from fixed-point data");
  betti->add_option("polygon", polygon_path, "Polygon JSON file, or - for stdin");
  betti->add_option("--xi", xi_text, "Primitive circle direction x,y");
  betti->add_option("--fixed-data", fixed_arg, "Fixed-point data JSON (inline or file)");

  auto* congruence = app.add_subcommand("congruent", "AGL(2,Z) congruence witness");
  congruence->add_option("first", polygon_path, "First polygon JSON")->required();
  congruence->add_option("second", second_path, "Second polygon JSON")->required();

  auto* extendable = app.add_subcommand("extendable", "Toric extendability of a circle subaction");
  extendable->add_option("polygon", polygon_path, "Polygon JSON file, or - for stdin")->required();
  extendable->add_option("--xi", xi_text, "Primitive circle direction x,y")->required();

  auto* autos = app.add_subcommand("form-autos", "Automorphisms of an intersection form");
  autos->add_option("--form", form_name, "hyperbolic or blowup")
      ->check(CLI::IsMember({"hyperbolic", "blowup"}));
  autos->add_option("--bound", bound, "Entry bound")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(reversed.begin(), reversed.end());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      emit(out, json_io::to_json(verify_delzant(json_io::polygon_from_json(load_json(polygon_path, in)))));
    } else if (classify->parsed()) {
      emit(out, json_io::to_json(classify_quadrilateral(json_io::polygon_from_json(load_json(polygon_path, in)))));
    } else if (standard->parsed()) {
      const HirzebruchParams params{parse_rational(a_text), parse_rational(b_text), parse_integer(m_text)};
      emit(out, json_io::to_json(standard_trapezoid(params)));
    } else if (count->parsed()) {
      out << count_tori(json_io::manifold_from_json(inline_or_file(manifold_arg, in))).str() << "\n";
    } else if (enumerate->parsed()) {
      Json list = Json::array();
      for (const HirzebruchParams& p : enumerate_tori(json_io::manifold_from_json(inline_or_file(manifold_arg, in))))
        list.push_back(json_io::to_json(p));
      emit(out, list);
    } else if (graph->parsed()) {
      const CircleDirection xi = parse_xi(xi_text);
      const LabeledGraph g = circle_graph(json_io::polygon_from_json(load_json(polygon_path, in)), xi);
      if (dot)
        out << to_dot(g);
      else
        emit(out, json_io::to_json(g));
    } else if (betti->parsed()) {
      const bool from_polygon = !polygon_path.empty();
      const bool from_data = !fixed_arg.empty();
      if (from_polygon == from_data)
        throw UsageError("betti needs either <polygon> --xi x,y or --fixed-data <json>");
      FixedPointData data;
      if (from_polygon) {
        if (xi_text.empty()) throw UsageError("betti <polygon> requires --xi");
        const CircleDirection xi = parse_xi(xi_text);
        data = fixed_point_data(circle_graph(json_io::polygon_from_json(load_json(polygon_path, in)), xi));
      } else {
        data = json_io::fixed_data_from_json(inline_or_file(fixed_arg, in));
      }
      emit(out, json_io::to_json(betti_numbers(data)));
    } else if (congruence->parsed()) {
      const Polygon first = json_io::polygon_from_json(load_json(polygon_path, in));
      const Polygon second = json_io::polygon_from_json(load_json(second_path, in));
      const std::optional<UnimodularAffine> witness = congruent(first, second);
      emit(out, witness ? json_io::to_json(*witness) : Json("none"));
    } else if (extendable->parsed()) {
      const CircleDirection xi = parse_xi(xi_text);
      emit(out, json_io::to_json(check_extendable(
                    circle_graph(json_io::polygon_from_json(load_json(polygon_path, in)), xi))));
    } else if (autos->parsed()) {
      const IntersectionForm form =
          form_name == "blowup" ? IntersectionForm::blow_up() : IntersectionForm::hyperbolic();
      Json list = Json::array();
      for (const IntMat2& m : form_automorphisms(form, bound)) list.push_back(json_io::to_json(m));
      emit(out, list);
    }
  } catch (const UsageError& e) {
    err << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << Json{{"error", std::string(code_name(e.code()))}, {"detail", e.what()}}.dump() << "\n";
    return kExitDomainError;
  }
  return kExitOk;
}

} // namespace toric::cli
