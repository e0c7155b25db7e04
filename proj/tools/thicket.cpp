#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <thicket/thicket.hpp>

namespace fs = std::filesystem;
using namespace thicket;

namespace {

constexpr int kUsage = 1;
constexpr int kInvalid = 2;
constexpr int kMismatch = 3;

struct TypeArgs {
    std::string series;
    int rank = 0;
    int r = 1;
    std::string t = "1";

    void add_to(CLI::App* app) {
        app->add_option("--series", series, "A, D or E")->required();
        app->add_option("--rank", rank, "rank n")->required();
        app->add_option("--r", r, "r >= 1")->required();
        app->add_option("--t", t, "1, 2, 3 or inf")->required();
    }
    CategoryType get() const { return CategoryType::make(parse_series(series), rank, r, parse_t(t)); }
};

int env_max_rank() {
    if (const char* s = std::getenv("THICKET_MAX_RANK")) {
        try {
            return std::stoi(s);
        } catch (const std::logic_error&) {
            throw InvalidDynkin(std::string("THICKET_MAX_RANK is not an integer: ") + s);
        }
    }
    return 6;
}

std::string describe(const Context& ctx, const GroupElement& w) {
    switch (ctx.rs.delta().series) {
        case Series::A: return brady_f(ctx.rs, w).str();
        case Series::D: return ar_bijection_f(ctx.rs, w).str();
        case Series::E: return "rank " + std::to_string(absolute_length(ctx.rs, w));
    }
    return "";
}

int cmd_count(const TypeArgs& ta, bool proper, bool json_out, bool check) {
    const CategoryType ct = ta.get();
    const ClassificationReport rep = classify(ct, check);
    const long long shown = rep.count_enumerated - (proper ? 2 : 0);
    if (json_out) {
        json j = to_json(rep);
        if (proper) j["proper"] = true;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << shown << "\n";
    }
    if (check && !rep.agree()) {
        std::cerr << "mismatch for " << ct.str() << ": formula "
                  << (rep.count_formula ? std::to_string(*rep.count_formula) : "n/a") << ", enumerated "
                  << rep.count_enumerated << ", brute force " << rep.count_brute_force << "\n";
        return kMismatch;
    }
    return 0;
}

int cmd_enumerate(const std::string& model, int n) {
    if (model == "A") {
        for (const auto& p : enumerate_nc_a(n)) std::cout << to_json(p).dump() << "\n";
    } else if (model == "B") {
        for (const auto& p : enumerate_nc_b(n)) std::cout << to_json(p).dump() << "\n";
    } else if (model == "D") {
        const Context& ctx = context(DynkinType::make(Series::D, n));
        for (const auto& p : enumerate_nc_d(ctx.rs, ctx.nc)) std::cout << to_json(p).dump() << "\n";
    } else {
        throw InvalidPartition("model must be A, B or D");
    }
    return 0;
}

int cmd_classify(const TypeArgs& ta, bool json_out, bool brute) {
    const CategoryType ct = ta.get();
    const Context& ctx = context(ct.delta);
    const auto thick = brute ? brute_force_classify(ct) : enumerate_thick(ct);
    if (json_out) {
        for (const auto& d : thick) std::cout << to_json(ctx, d).dump() << "\n";
        return 0;
    }
    const InvarianceCriterion crit = reduce_criterion(ct);
    std::cout << ct.str() << " criterion " << mode_name(crit.mode) << " s=" << crit.s << ": " << thick.size()
              << " thick subcategories\n";
    for (const auto& d : thick)
        std::cout << "  #" << d.nc_index << " " << describe(ctx, d.nc_element) << " (" << d.roots.count()
                  << " roots)\n";
    return 0;
}

int cmd_render(const std::string& model, const std::string& blocks, std::optional<TypeArgs> ta,
               const std::string& out, bool ascii, int columns) {
    if (!model.empty()) {
        const json j = json::parse(blocks);
        std::string svg;
        if (model == "A") {
            int n = 0;
            for (const auto& b : j)
                for (int x : b) n = std::max(n, x);
            svg = render_circle(SetPartitionA(n, j.get<std::vector<Block>>()));
        } else if (model == "D") {
            int n = 0;
            for (const auto& b : j)
                for (int x : b) n = std::max(n, std::abs(x));
            svg = render_circle(DPartition(n, j.get<std::vector<Block>>()));
        } else {
            throw InvalidPartition("render model must be A or D");
        }
        if (out.empty() || out == "-") {
            std::cout << svg;
        } else {
            std::ofstream(out) << svg;
        }
        return 0;
    }
    if (!ta) throw InvalidType("render needs --model/--blocks or a category type");
    const CategoryType ct = ta->get();
    const Context& ctx = context(ct.delta);
    const StripWindow w{0, columns > 0 ? columns : 2 * ct.r + 2, ct.r};
    const auto thick = enumerate_thick(ct);
    const std::string stem = ct.delta.name() + "_r" + std::to_string(ct.r) + "_t" + t_string(ct.t);
    if (ascii) {
        for (std::size_t i = 0; i < thick.size(); ++i)
            std::cout << "# " << stem << " #" << i << " " << describe(ctx, thick[i].nc_element) << "\n"
                      << render_ar_strip_ascii(ctx, thick[i].roots, w);
        return 0;
    }
    const fs::path dir = out.empty() ? fs::path(".") : fs::path(out);
    fs::create_directories(dir);
    for (std::size_t i = 0; i < thick.size(); ++i) {
        const std::string name = stem + "_" + std::to_string(i);
        std::ofstream(dir / (name + ".svg")) << render_ar_strip_svg(ctx, thick[i].roots, w);
        std::ofstream(dir / (name + ".txt")) << render_ar_strip_ascii(ctx, thick[i].roots, w);
    }
    std::cout << "wrote " << thick.size() << " strips to " << dir.string() << "\n";
    return 0;
}

int cmd_table(bool json_out) {
    if (json_out) {
        json rows = json::array();
        for (const auto& r : overview_table())
            rows.push_back({{"type", r.type}, {"classifying", r.classifying}, {"alternative", r.alternative}, {"count", r.count}});
        std::cout << rows.dump(2) << "\n";
        return 0;
    }
    std::cout << overview_markdown();
    std::cerr << overview_notes();
    return 0;
}

int cmd_verify(int max_rank) {
    std::size_t failed = 0, total = 0;
    run_battery(max_rank, [&](const VerificationReport& r) {
        ++total;
        if (r.passed()) {
            std::cout << "PASS " << r.name << " (" << r.checked << ")\n";
            return;
        }
        ++failed;
        std::cout << "FAIL " << r.name << ": " << r.counterexamples.front();
        if (r.counterexamples.size() > 1) std::cout << " (+" << r.counterexamples.size() - 1 << " more)";
        std::cout << "\n";
    });
    if (failed == 0) {
        std::cout << "all checks passed (" << total << ")\n";
        return 0;
    }
    std::cout << failed << " of " << total << " checks failed\n";
    return kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"thick subcategories of finite triangulated categories"};
    app.require_subcommand(1);

    TypeArgs count_t, classify_t, render_t;
    bool proper = false, json_out = false, check = false, brute = false, ascii = false;
    std::string model, blocks, out;
    int n = 0, columns = 0;
    int max_rank = 0;

    auto* count = app.add_subcommand("count", "number of thick subcategories");
    count_t.add_to(count);
    count->add_flag("--proper", proper, "exclude 0 and the whole category");
    count->add_flag("--json", json_out, "JSON report");
    count->add_flag("--check", check, "compare formula, enumeration and brute force");

    auto* enumerate = app.add_subcommand("enumerate", "noncrossing partitions as JSON lines");
    enumerate->add_option("--model", model, "A, B or D")->required();
    enumerate->add_option("--n", n, "size")->required();

    auto* classify_cmd = app.add_subcommand("classify", "list thick subcategories");
    classify_t.add_to(classify_cmd);
    classify_cmd->add_flag("--json", json_out, "descriptor JSON lines");
    classify_cmd->add_flag("--brute-force", brute, "use the translation-quiver oracle");

    auto* render = app.add_subcommand("render", "SVG / ASCII diagrams");
    render->add_option("--model", model, "circle diagram: A or D");
    render->add_option("--blocks", blocks, "blocks as JSON, e.g. [[1,4],[2,3],[5],[6]]");
    render->add_option("--series", render_t.series, "A, D or E");
    render->add_option("--rank", render_t.rank, "rank n");
    render->add_option("--r", render_t.r, "r >= 1");
    render->add_option("--t", render_t.t, "1, 2, 3 or inf");
    render->add_option("--out", out, "output file (circle) or directory (strips)");
    render->add_option("--columns", columns, "strip width in tau-steps");
    render->add_flag("--ascii", ascii, "print strips as text");

    auto* table = app.add_subcommand("table", "overview of the classification");
    table->add_flag("--json", json_out, "JSON rows");

    auto* verify = app.add_subcommand("verify", "run the cross-check battery");
    verify->add_option("--max-rank", max_rank, "largest rank checked (default THICKET_MAX_RANK or 6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*count) return cmd_count(count_t, proper, json_out, check);
        if (*enumerate) return cmd_enumerate(model, n);
        if (*classify_cmd) return cmd_classify(classify_t, json_out, brute);
        if (*render) {
            std::optional<TypeArgs> ta;
            if (!render_t.series.empty()) ta = render_t;
            return cmd_render(model, blocks, ta, out, ascii, columns);
        }
        if (*table) return cmd_table(json_out);
        if (*verify) return cmd_verify(max_rank > 0 ? max_rank : env_max_rank());
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kUsage;
}
