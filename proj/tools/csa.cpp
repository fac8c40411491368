// csa: command-line front end. Exit 0 on success or "yes", 2 on "no" from a
// decision command, 1 on error with a JSON diagnostic on stderr.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "csa/commands.hpp"
#include "csa/error.hpp"

using namespace csa;

namespace {

struct Flags {
    std::string algebra;
    std::vector<std::string> polys;
    std::string minpoly;
    std::string class_doc;
    std::vector<std::string> matrices;
    std::string override_doc;
    std::vector<std::string> places;
    long height = 3;
    long trials = 1000;
    std::uint64_t seed = 0;
    bool explain = false;
    bool allow_singular = false;
    std::string format = "json";
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Json read_json(const std::string& path) {
    if (path.empty()) return nullptr;
    try {
        return Json::parse(read_file(path));
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
}

// A polynomial flag is inline infix text or a file holding infix text or a
// JSON document.
Json poly_flag(const std::string& arg) {
    if (arg.empty()) return nullptr;
    std::error_code ec;
    if (!std::filesystem::is_regular_file(arg, ec)) return arg;
    const std::string text = read_file(arg);
    Json j = Json::parse(text, nullptr, false);
    return j.is_discarded() ? Json(text) : j;
}

CommandInput to_input(const Flags& f) {
    CommandInput in;
    in.algebra = read_json(f.algebra);
    for (const auto& p : f.polys) in.polys.push_back(poly_flag(p));
    in.minpoly = poly_flag(f.minpoly);
    in.class_doc = read_json(f.class_doc);
    for (const auto& m : f.matrices) in.matrices.push_back(read_json(m));
    in.override_doc = read_json(f.override_doc);
    in.places = f.places;
    in.height = f.height;
    in.trials = f.trials;
    in.seed = f.seed;
    in.explain = f.explain;
    in.allow_singular = f.allow_singular;
    return in;
}

void print_error(const std::string& kind, const std::string& message) {
    std::cerr << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Characteristic polynomials and conjugacy classes in central simple algebras over Q"};
    app.require_subcommand(1);
    Flags f;

    auto add = [&](const char* name, const char* help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--format", f.format, "json (compact) or pretty")->check(CLI::IsMember({"json", "pretty"}));
        return sub;
    };
    auto algebra = [&](CLI::App* sub) {
        sub->add_option("--algebra", f.algebra, "algebra document");
        sub->add_option("--override", f.override_doc, "splitting override document");
    };
    auto poly = [&](CLI::App* sub, const char* help) { sub->add_option("--poly", f.polys, help); };

    auto* s = add("factor", "factor a polynomial over Q");
    poly(s, "polynomial (text or file)");
    s = add("splitting", "splitting types of places of Q in Q[t]/(p)");
    poly(s, "monic irreducible polynomial");
    s->add_option("--place", f.places, "prime or inf (default: ramified primes and inf)");
    s = add("capacity", "capacity of D tensor Q[t]/(p)");
    algebra(s);
    poly(s, "monic irreducible polynomial");
    s = add("charpoly-check", "is f a characteristic polynomial of A");
    algebra(s);
    poly(s, "monic polynomial of degree deg A, or a factored document");
    s->add_flag("--explain", f.explain, "add a prose reading of the certificates");
    s = add("embed-check", "does Q[t]/(p) embed in A");
    algebra(s);
    poly(s, "monic irreducible polynomial");
    s->add_flag("--explain", f.explain, "add a prose reading");
    s = add("classes", "conjugacy classes of A^x with characteristic polynomial f");
    algebra(s);
    poly(s, "monic polynomial of degree deg A");
    s = add("rcf", "module structure of a class");
    algebra(s);
    s->add_option("--class", f.class_doc, "class document");
    s = add("realizable", "is (f, m) the (characteristic, minimal) pair of some element");
    algebra(s);
    poly(s, "characteristic polynomial");
    s->add_option("--minpoly", f.minpoly, "minimal polynomial (text or file)");
    s = add("quat-charpoly", "reduced characteristic and minimal polynomial of a quaternion matrix");
    s->add_option("--matrix", f.matrices, "matrix document");
    s = add("quat-invariants", "class invariants of a quaternion matrix");
    s->add_option("--matrix", f.matrices, "matrix document");
    s->add_flag("--allow-singular", f.allow_singular, "accept singular matrices and report the t-part");
    s = add("quat-conjugate", "are two quaternion matrices conjugate");
    s->add_option("--matrix", f.matrices, "two matrix documents");
    s = add("quat-search", "search for a quaternion matrix with a given characteristic polynomial");
    s->add_option("--algebra", f.algebra, "quaternion algebra document");
    poly(s, "target polynomial of degree 2n");
    s->add_option("--height", f.height, "coordinate height bound")->check(CLI::PositiveNumber);
    s->add_option("--trials", f.trials, "random trials after the structured pass")->check(CLI::NonNegativeNumber);
    s->add_option("--seed", f.seed, "seed for the random trials");
    s = add("division-classes", "conjugacy classes of D^x among candidate polynomials");
    algebra(s);
    poly(s, "candidate polynomials (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error("UsageError", e.what());
        return 1;
    }

    try {
        for (const auto* sub : app.get_subcommands()) {
            const CommandResult out = run_command(sub->get_name(), to_input(f));
            std::cout << (f.format == "pretty" ? out.doc.dump(2) : out.doc.dump()) << "\n";
            return out.negative ? 2 : 0;
        }
    } catch (const Error& e) {
        print_error(std::string(to_string(e.kind())), e.what());
        return 1;
    } catch (const std::exception& e) {
        print_error("Internal", e.what());
        return 1;
    }
    return 1;
}
