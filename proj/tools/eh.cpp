// eh: command-line front end for the eisenheron library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include <eisenheron/eisenheron.hpp>

namespace eh = eisenheron;

namespace {

enum ExitCode : int {
    exit_ok = 0,
    exit_error = 1,
    exit_not_a_triangle = 2,
    exit_not_heron = 3,
    exit_not_dominant = 4,
    exit_theorem_violation = 10,
    exit_embeddability_violation = 11,
};

unsigned resolve_threads(unsigned flag_value)
{
    if (flag_value > 0) {
        return flag_value;
    }
    if (const char* env = std::getenv("EH_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid EH_THREADS='" << env << "'\n";
    }
    return 1;
}

/// stdout unless a path is given; throws when the path cannot be opened.
class Output {
public:
    explicit Output(const std::string& path)
    {
        if (!path.empty() && path != "-") {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) {
                throw std::runtime_error("cannot open '" + path + "' for writing");
            }
        }
    }

    std::ostream& stream() { return file_ ? *file_ : std::cout; }

    void finish()
    {
        stream().flush();
        if (!stream()) {
            throw std::runtime_error("write failed");
        }
    }

private:
    std::unique_ptr<std::ofstream> file_;
};

void emit(std::ostream& os, const eh::TriangleRecord& r, const std::string& format)
{
    if (format == "table") {
        os << eh::to_table_row(r) << "\n";
    } else {
        os << eh::to_jsonl(r) << "\n";
    }
}

int cmd_enumerate(std::uint64_t max_w, const std::string& format, unsigned threads, const std::string& out_path)
{
    const auto found = eh::enumerate_perimeter_dominant(max_w, threads);
    Output out(out_path);
    if (format == "table") {
        out.stream() << eh::table_header() << "\n";
    }
    for (const auto& t : found) {
        auto classified = eh::classify(t.sides);
        if (!classified) {
            throw eh::TheoremViolation("classifier rejected enumerated triangle " + t.sides.describe());
        }
        emit(out.stream(), eh::to_record(*classified), format);
    }
    out.finish();
    return exit_ok;
}

int cmd_classify(const std::string& a, const std::string& b, const std::string& c, const std::string& format)
{
    const auto result = eh::assess(eh::parse_exact(a), eh::parse_exact(b), eh::parse_exact(c));
    switch (result.verdict) {
    case eh::Verdict::classified:
        if (format == "table") {
            std::cout << eh::table_header() << "\n";
        }
        emit(std::cout, eh::to_record(*result.triangle), format);
        return exit_ok;
    case eh::Verdict::not_a_triangle:
        std::cout << "not-a-triangle\n";
        return exit_not_a_triangle;
    case eh::Verdict::not_heron:
        std::cout << "not-heron\n";
        return exit_not_heron;
    case eh::Verdict::not_perimeter_dominant:
        std::cout << "not-perimeter-dominant\n";
        return exit_not_dominant;
    }
    return exit_error;
}

int cmd_family(const std::string& tag, std::size_t count, const std::string& format)
{
    const eh::Family f = eh::parse_family(tag);
    if (format == "table") {
        std::cout << eh::table_header() << "\n";
    }
    // One stream instead of family_member(k) per k keeps this linear in count.
    eh::PellStream stream(eh::pell_form_for(f));
    for (std::size_t k = 1; k <= count; ++k) {
        const eh::ClassifiedTriangle t = eh::family_triangle(f, stream.next());
        emit(std::cout, eh::to_record(t), format);
    }
    return exit_ok;
}

int cmd_pell(const std::string& d, bool even_x, std::size_t count, const std::string& format)
{
    const eh::PellForm form(even_x ? 4 : 1, eh::parse_exact(d));
    eh::PellStream stream(form);
    for (std::size_t k = 0; k < count; ++k) {
        const auto s = stream.next();
        if (format == "table") {
            std::cout << s.index << "\t" << s.x << "\t" << s.y << "\n";
        } else {
            std::cout << "{\"index\":" << s.index << ",\"x\":\"" << s.x << "\",\"y\":\"" << s.y << "\"}\n";
        }
    }
    return exit_ok;
}

int cmd_verify(std::uint64_t max_w, unsigned threads)
{
    eh::VerifyOptions opt;
    opt.threads = threads;
    const auto report = eh::run_verification(max_w, opt);
    report.print(std::cout);
    return report.all_passed() ? exit_ok : exit_error;
}

int cmd_embed(const std::string& a, const std::string& b, const std::string& c, bool all)
{
    const eh::ExactInt ea = eh::parse_exact(a), eb = eh::parse_exact(b), ec = eh::parse_exact(c);
    if (!eh::TriangleSides::is_triangle(ea, eb, ec)) {
        std::cout << "error: not-a-triangle\n";
        return exit_not_a_triangle;
    }
    const eh::TriangleSides t(ea, eb, ec);
    const auto n = eh::area_quantum(t);
    if (!n) {
        std::cout << "error: " << t.describe() << " is not lattice-Heron\n";
        return exit_not_heron;
    }
    const auto embeddings = all ? eh::embed_all(t) : std::vector<eh::LatticeTriangle>{eh::embed(t)};
    for (const auto& tri : embeddings) {
        const auto sq = tri.squared_sides();
        std::cout << tri.str() << "  squared_sides=" << sq[0] << "," << sq[1] << "," << sq[2]
                  << "  area_quantum=" << eh::area_quantum_of(tri) << "  " << (eh::realizes(tri, t) ? "ok" : "MISMATCH")
                  << "\n";
    }
    return exit_ok;
}

int cmd_render(const std::string& preset, const std::string& spec_path, const std::string& out_path)
{
    eh::FigureSpec fig;
    if (!spec_path.empty()) {
        std::ifstream in(spec_path);
        if (!in) {
            throw std::runtime_error("cannot read '" + spec_path + "'");
        }
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            throw eh::ValidationError(std::string("spec: ") + e.what());
        }
        fig = eh::figure_spec_from_json(j);
    } else if (preset == "figure1") {
        fig = eh::figure1_preset();
    } else {
        throw eh::ValidationError("preset: unknown preset '" + preset + "'");
    }
    const std::string svg = eh::render_svg(fig);
    Output out(out_path);
    out.stream() << svg;
    out.finish();
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Perimeter-dominant triangles with sides in sqrt3*N and area in (sqrt3/4)*N"};
    app.require_subcommand(1);

    std::uint64_t max_w = 0;
    std::string format = "jsonl";
    unsigned threads = 0;
    std::string out_path;
    std::string a, b, c;
    std::string family_tag;
    std::size_t count = 5;
    std::string d;
    bool even_x = false;
    bool all = false;
    std::string preset;
    std::string spec_path;

    auto* enumerate = app.add_subcommand("enumerate", "Brute-force enumeration over (u,v,w) with w <= max-w");
    enumerate->add_option("--max-w", max_w, "Largest (u,v,w) coordinate")->required()->check(CLI::Range(1, 10'000'000));
    enumerate->add_option("--format", format)->check(CLI::IsMember({"jsonl", "table"}));
    enumerate->add_option("--threads", threads, "Worker threads (falls back to EH_THREADS)");
    enumerate->add_option("--out", out_path, "Output file (default stdout)");

    auto* classify = app.add_subcommand("classify", "Classify the triangle with sides A*sqrt3, B*sqrt3, C*sqrt3");
    classify->add_option("A", a)->required();
    classify->add_option("B", b)->required();
    classify->add_option("C", c)->required();
    classify->add_option("--format", format)->check(CLI::IsMember({"jsonl", "table"}));

    auto* family = app.add_subcommand("family", "First members of family a, b or c");
    family->add_option("family", family_tag)->required()->check(CLI::IsMember({"a", "b", "c"}));
    family->add_option("--count", count)->check(CLI::PositiveNumber);
    family->add_option("--format", format)->check(CLI::IsMember({"jsonl", "table"}));

    auto* pell = app.add_subcommand("pell", "Solutions of x^2 - D y^2 = 1 (or 4x^2 - D y^2 = 1 with --even-x)");
    pell->add_option("--d", d)->required();
    pell->add_flag("--even-x", even_x, "Keep even X = 2x, solving 4x^2 - D y^2 = 1");
    pell->add_option("--count", count)->check(CLI::PositiveNumber);
    pell->add_option("--format", format)->check(CLI::IsMember({"jsonl", "table"}));

    auto* verify = app.add_subcommand("verify", "Run every consistency check");
    verify->add_option("--max-w", max_w)->required()->check(CLI::Range(1, 10'000'000));
    verify->add_option("--threads", threads);

    auto* embed = app.add_subcommand("embed", "Place the triangle on the Eisenstein lattice");
    embed->add_option("A", a)->required();
    embed->add_option("B", b)->required();
    embed->add_option("C", c)->required();
    embed->add_flag("--all", all, "List every embedding up to lattice symmetry");

    auto* render = app.add_subcommand("render", "Write an SVG figure");
    auto* preset_opt = render->add_option("--preset", preset)->check(CLI::IsMember({"figure1"}));
    auto* spec_opt = render->add_option("--spec", spec_path, "Figure description (JSON)");
    preset_opt->excludes(spec_opt);
    render->add_option("--out", out_path, "Output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enumerate) return cmd_enumerate(max_w, format, resolve_threads(threads), out_path);
        if (*classify) return cmd_classify(a, b, c, format);
        if (*family) return cmd_family(family_tag, count, format);
        if (*pell) return cmd_pell(d, even_x, count, format);
        if (*verify) return cmd_verify(max_w, resolve_threads(threads));
        if (*embed) return cmd_embed(a, b, c, all);
        if (*render) {
            if (preset.empty() && spec_path.empty()) {
                std::cerr << "error: render needs --preset or --spec\n";
                return exit_error;
            }
            return cmd_render(preset, spec_path, out_path);
        }
    } catch (const eh::TheoremViolation& e) {
        std::cerr << "theorem violation: " << e.what() << "\n";
        return exit_theorem_violation;
    } catch (const eh::EmbeddabilityViolation& e) {
        std::cerr << "embeddability violation: " << e.what() << "\n";
        return exit_embeddability_violation;
    } catch (const eh::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
    return exit_error;
}
