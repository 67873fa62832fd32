#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "bq/errors.hpp"
#include "bqcli/commands.hpp"
#include "bqcli/verify.hpp"

using namespace bq;
using namespace bq::cli;

namespace {

enum Exit { kPass = 0, kComputational = 1, kParse = 2, kMismatch = 3 };

std::string read_input(const std::string& path)
{
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InvalidParameters("cannot open input file '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// "1,2,0", "[1, 2, 0]" or "1 2 0".
std::vector<std::string> split_order(const std::string& text)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ',' || ch == ' ' || ch == '[' || ch == ']' || ch == '\t') {
            if (!cur.empty())
                out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}

int emit(const Json& r, Format f)
{
    std::cout << emit_report(r, f);
    return kPass;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Homological invariants and stratifications of bound quiver algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    RunOptions opt;
    std::string format = "text";
    std::string input = "-";
    std::string order_text;
    std::vector<std::string> module_texts;
    std::vector<std::string> ids;
    bool list_ids = false;
    std::size_t jobs = 1;

    app.add_option("--bound", opt.bound, "Search bound for resolutions and certificates")->capture_default_str();
    app.add_option("--seed", opt.seed, "Seed for randomized searches")->capture_default_str();
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}))->capture_default_str();

    auto add_input = [&](CLI::App* s) { s->add_option("input", input, "Algebra file, or - for standard input"); };
    auto add_order = [&](CLI::App* s) { s->add_option("--order", order_text, "Vertex order, lowest first, e.g. 1,2,0"); };
    auto add_modules = [&](CLI::App* s) {
        s->add_option("--module", module_texts, "Module expression, e.g. 'S(1)' or 'trunc(0, 2)'; repeatable")
            ->allow_extra_args(false);
    };

    auto* analyze = app.add_subcommand("analyze", "Dimension invariants of the algebra");
    add_input(analyze);
    auto* resolve = app.add_subcommand("resolve", "Projective and injective resolutions of modules");
    add_input(resolve);
    add_modules(resolve);
    resolve->add_option("--steps", opt.steps, "Resolution terms to print")->capture_default_str();
    auto* stratify = app.add_subcommand("stratify", "Standard modules and stratification flags");
    add_input(stratify);
    add_order(stratify);
    stratify->add_flag("--all-orders", opt.all_orders, "Classify every order of the vertices");
    auto* tilting = app.add_subcommand("tilting", "Characteristic tilting and cotilting modules");
    add_input(tilting);
    add_order(tilting);
    auto* relar = app.add_subcommand("relar", "Relative Auslander-Reiten sequences");
    add_input(relar);
    add_modules(relar);
    relar->add_option("--level", opt.level, "Level l of the subcategory Dom_l")->capture_default_str();
    auto* verify = app.add_subcommand("verify-paper", "Check recorded example values");
    verify->add_option("ids", ids, "Example ids (default: one per acceptance criterion)");
    verify->add_flag("--list", list_ids, "List the known ids");
    verify->add_option("--jobs", jobs, "Ids checked in parallel")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kPass : kParse;
    }

    const Format fmt = format == "structured" ? Format::structured : Format::text;
    std::string command = app.get_subcommands().front()->get_name();

    try {
        if (command == "verify-paper") {
            if (list_ids) {
                Json r = report_header(command, opt.bound, opt.seed);
                r["ids"] = all_verify_ids();
                return emit(r, fmt);
            }
            if (ids.empty())
                ids = verify_ids();
            for (const auto& id : ids) {
                const auto known = all_verify_ids();
                if (std::find(known.begin(), known.end(), id) == known.end())
                    throw UnknownExampleId("unknown example id '" + id + "'");
            }
            std::vector<VerifyResult> results(ids.size());
            if (jobs <= 1) {
                for (std::size_t k = 0; k < ids.size(); ++k)
                    results[k] = verify_paper_example(ids[k], opt.bound, opt.seed);
            } else {
                for (std::size_t start = 0; start < ids.size(); start += jobs) {
                    std::vector<std::future<VerifyResult>> fs;
                    for (std::size_t k = start; k < std::min(ids.size(), start + jobs); ++k)
                        fs.push_back(std::async(std::launch::async, verify_paper_example, ids[k], opt.bound, opt.seed));
                    for (std::size_t k = 0; k < fs.size(); ++k)
                        results[start + k] = fs[k].get();
                }
            }
            Json r = report_header(command, opt.bound, opt.seed);
            Json arr = Json::array();
            bool all = true;
            for (const auto& v : results) {
                arr.push_back(verify_json(v));
                all = all && v.passed();
            }
            r["results"] = arr;
            r["pass"] = all;
            emit(r, fmt);
            return all ? kPass : kMismatch;
        }

        if (!order_text.empty())
            opt.order = split_order(order_text);
        for (const auto& t : module_texts)
            opt.modules.push_back(parse_module_expr(t));
        LoadedAlgebra la = load_algebra(parse_algebra_dsl(read_input(input)));
        if (command == "analyze")
            return emit(run_analyze(la, opt), fmt);
        if (command == "resolve")
            return emit(run_resolve(la, opt), fmt);
        if (command == "stratify")
            return emit(run_stratify(la, opt), fmt);
        if (command == "tilting")
            return emit(run_tilting(la, opt), fmt);
        return emit(run_relar(la, opt), fmt);
    } catch (const ParseError& e) {
        Json r = report_header(command, opt.bound, opt.seed);
        r["error"] = {{"kind", e.kind()}, {"line", e.line()}, {"column", e.column()}, {"expected", e.expected()},
                      {"message", e.what()}};
        emit(r, fmt);
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const Error& e) {
        Json r = report_header(command, opt.bound, opt.seed);
        r["error"] = {{"kind", e.kind()}, {"message", e.what()}};
        emit(r, fmt);
        std::cerr << e.kind() << ": " << e.what() << "\n";
        return kComputational;
    }
}
