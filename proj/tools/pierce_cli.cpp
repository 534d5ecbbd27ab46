// Command-line front end: run the piercers, verify certificates, fuzz
// against the brute-force oracle, probe the general-k conjecture and render
// figures.
//
// Exit codes: 0 ok, 1 input error, 2 invalid instance (hypothesis violated,
// witness printed), 3 internal theorem violation (a bug, not bad input).

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "pierce/disk.hpp"
#include "pierce/errors.hpp"
#include "pierce/four_color.hpp"
#include "pierce/json_io.hpp"
#include "pierce/oracle.hpp"
#include "pierce/render.hpp"
#include "pierce/symmetric.hpp"
#include "pierce/triangle.hpp"

using namespace pierce;

namespace {

int thread_cap() {
    if (const char* env = std::getenv("PIERCE_LAB_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open " + path + " for writing");
    out << text;
}

BodyKind parse_body_kind(const std::string& name) {
    if (name == "disk") return BodyKind::Disk;
    if (name == "square") return BodyKind::Square;
    if (name == "rectangle") return BodyKind::Rectangle;
    if (name == "hexagon") return BodyKind::Hexagon;
    if (name == "random-symmetric") return BodyKind::RandomSymmetric;
    if (name == "triangle") return BodyKind::Triangle;
    if (name == "random-triangle") return BodyKind::RandomTriangle;
    throw InputError("unknown body kind \"" + name + "\"");
}

std::string auto_method(const ColoredInstance& inst) {
    if (inst.generator.is_disk()) return "disk";
    if (inst.families.size() == 4) return "four-color";
    if (inst.families.size() == 3) {
        if (inst.generator.verts().size() == 3) return "triangle";
        if (is_centrally_symmetric(inst.generator)) return "symmetric";
    }
    throw InputError("no method applies: need a disk generator, 4 colors, or "
                     "3 colors with a triangle or symmetric generator");
}

// Run the chosen method; returns the certificate JSON (with the cover
// attached for the disk route) and fills out_cert.
json run_method(const ColoredInstance& inst, const std::string& method,
                PiercingCertificate& out_cert, double slack) {
    if (method == "symmetric") {
        SymmetricResult res = symmetric_pierce(inst, slack);
        out_cert = res.cert;
        return certificate_to_json(res.cert);
    }
    if (method == "jung") {
        JungPierceResult res = colorful_jung_pierce(inst, nullptr, slack);
        out_cert = res.cert;
        return certificate_to_json(res.cert);
    }
    if (method == "triangle") {
        TrianglePierceResult res = triangle_pierce(inst, slack);
        out_cert = res.cert;
        return certificate_to_json(res.cert);
    }
    if (method == "disk") {
        DiskPierceResult res = disk_pierce(inst);
        out_cert = res.pierce_cert;
        json j = certificate_to_json(res.pierce_cert);
        j["cover"] = cover_certificate_to_json(res.cover_cert);
        return j;
    }
    if (method == "four-color") {
        FourColorResult res = four_color_pierce(inst, slack);
        out_cert = res.cert;
        return certificate_to_json(res.cert);
    }
    throw InputError("unknown method \"" + method + "\"");
}

int cmd_pierce(const std::string& input, std::string method,
               const std::string& out, double slack) {
    json j = read_json_file(input);
    ColoredInstance inst = instance_from_json(j);
    if (method == "auto") method = auto_method(inst);
    CrossReport rep = validate_cross_intersecting(inst);
    if (!rep.ok) {
        const PairRef& v = *rep.violating;
        std::cerr << "invalid instance: translate " << v.index_a << " of family "
                  << v.family_a << " and translate " << v.index_b << " of family "
                  << v.family_b << " are at gauge distance above 2\n";
        return 2;
    }
    PiercingCertificate cert;
    json cj = run_method(inst, method, cert, slack);
    std::string text = cj.dump(2) + "\n";
    if (!out.empty())
        write_text_file(out, text);
    else
        std::cout << text;
    return 0;
}

int cmd_verify(const std::string& input, const std::string& cert_path,
               double slack) {
    ColoredInstance inst = instance_from_json(read_json_file(input));
    PiercingCertificate cert = certificate_from_json(read_json_file(cert_path));
    TheoremReport rep = verify_theorem(inst, cert, slack);
    std::cout << "certificate: " << (rep.certificate_ok ? "ok" : "FAIL") << "\n";
    std::cout << "oracle: "
              << (rep.oracle_ok
                      ? "pi <= 3 (pi = " + std::to_string(rep.oracle_pi) + ")"
                      : "FAIL")
              << "\n";
    if (!rep.note.empty()) std::cout << "note: " << rep.note << "\n";
    return rep.ok ? 0 : 3;
}

struct FuzzOutcome {
    bool ok = false;
    uint64_t seed = 0;
    std::string method;
    std::string error;
};

int cmd_fuzz(int trials, uint64_t seed, const std::string& body_name, int colors,
             int max_size, double spread, const std::string& out) {
    std::vector<FuzzOutcome> outcomes(static_cast<size_t>(std::max(trials, 0)));
    int threads = std::min(thread_cap(), std::max(trials, 1));
    std::atomic<int> next{0};

    auto worker = [&]() {
        for (int i = next.fetch_add(1); i < trials; i = next.fetch_add(1)) {
            uint64_t s = seed * 1000003ULL + static_cast<uint64_t>(i);
            FuzzOutcome& oc = outcomes[static_cast<size_t>(i)];
            oc.seed = s;
            try {
                Rng body_rng(s);
                ConvexBody body =
                    make_generator_body(parse_body_kind(body_name), body_rng);
                std::vector<int> sizes;
                Rng size_rng(s ^ 0x517eULL);
                for (int f = 0; f < colors; ++f)
                    sizes.push_back(
                        1 + static_cast<int>(size_rng.uniform_int(max_size)));
                ColoredInstance inst =
                    generate_instance(s, GenSpec{body, sizes, spread});
                std::string method = auto_method(inst);
                oc.method = method;
                PiercingCertificate cert;
                run_method(inst, method, cert, kCertSlack);
                TheoremReport rep = verify_theorem(inst, cert);
                oc.ok = rep.ok;
                if (!rep.ok) oc.error = "verification failed: " + rep.note;
            } catch (const std::exception& e) {
                oc.ok = false;
                oc.error = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    int passed = 0;
    json failures = json::array();
    for (const FuzzOutcome& oc : outcomes) {
        if (oc.ok) {
            ++passed;
        } else {
            failures.push_back(
                json{{"seed", oc.seed}, {"method", oc.method}, {"error", oc.error}});
        }
    }
    std::cout << "fuzz: " << passed << "/" << trials << " passed (body "
              << body_name << ", colors " << colors << ")\n";
    if (!out.empty()) {
        std::ostringstream lines;
        for (const json& f : failures) lines << f.dump() << "\n";
        write_text_file(out, lines.str());
    }
    return failures.empty() ? 0 : 3;
}

int cmd_explore(int trials, uint64_t seed, const std::string& body_name, int k,
                int max_size, const std::string& out) {
    Rng body_rng(seed);
    ConvexBody body = make_generator_body(parse_body_kind(body_name), body_rng);
    std::vector<int> sizes;
    Rng size_rng(seed ^ 0xeeULL);
    for (int f = 0; f < k; ++f)
        sizes.push_back(1 + static_cast<int>(size_rng.uniform_int(max_size)));
    ExploreResult res = explore_conjecture(seed, trials, k, body, sizes);
    std::ostringstream lines;
    for (const ExploreRecord& rec : res.records) {
        json j{{"seed", rec.seed},
               {"trial", rec.trial},
               {"value", rec.value},
               {"instance", instance_to_json(rec.instance)}};
        lines << j.dump() << "\n";
    }
    if (!out.empty())
        write_text_file(out, lines.str());
    else
        std::cout << lines.str();
    std::cout << "explore: worst value " << res.worst_value << " over "
              << res.records.size() << " trials; " << res.counterexamples.size()
              << " candidate counterexamples\n";
    return res.counterexamples.empty() ? 0 : 3;
}

int cmd_render(const std::string& input, const std::string& cert_path,
               const std::string& out) {
    ColoredInstance inst = instance_from_json(read_json_file(input));
    PiercingCertificate given = certificate_from_json(read_json_file(cert_path));
    std::string svg;
    // Re-run the certified method to recover the construction overlays; the
    // recomputed certificate must agree with the given one.
    PiercingCertificate fresh;
    if (given.method == "symmetric") {
        SymmetricResult res = symmetric_pierce(inst);
        fresh = res.cert;
        svg = render_symmetric(inst, res);
    } else if (given.method == "jung") {
        JungPierceResult res = colorful_jung_pierce(inst);
        fresh = res.cert;
        svg = render_jung(inst, res);
    } else if (given.method == "triangle") {
        TrianglePierceResult res = triangle_pierce(inst);
        fresh = res.cert;
        svg = render_triangle(inst, res);
    } else if (given.method == "disk") {
        DiskPierceResult res = disk_pierce(inst);
        fresh = res.pierce_cert;
        svg = render_disk_instance(inst, res);
    } else if (given.method == "four-color") {
        FourColorResult res = four_color_pierce(inst);
        fresh = res.cert;
        svg = render_four_color(inst, res);
    } else {
        throw InputError("unknown certificate method \"" + given.method + "\"");
    }
    if (fresh.family_index != given.family_index ||
        fresh.points.size() != given.points.size())
        throw InputError("certificate does not match this instance");
    for (size_t i = 0; i < fresh.points.size(); ++i)
        if (dist(fresh.points[i], given.points[i]) > 1e-6)
            throw InputError("certificate does not match this instance");
    write_text_file(out, svg);
    return 0;
}

int cmd_jung(const std::string& body_name, const std::string& input,
             uint64_t seed) {
    Gauge g{ConvexBody::disk(1.0)};
    if (!input.empty()) {
        g = difference_gauge(body_from_json(read_json_file(input)));
    } else {
        Rng rng(seed);
        g = difference_gauge(make_generator_body(parse_body_kind(body_name), rng));
    }
    JungData jd = jung_radius(g);
    std::cout << "jung radius: " << jd.j << "\n";
    std::cout << "witness triangle: (0,0) (" << jd.u.x << "," << jd.u.y << ") ("
              << jd.v.x << "," << jd.v.y << ")\n";
    std::cout << "search budget: " << jd.starts << " starts, " << jd.refine_steps
              << " refinement steps used by the best start\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"piercing and covering lab for families of translates"};
    app.require_subcommand(1);

    std::string input, cert_path, out, method = "auto", body = "disk";
    uint64_t seed = 1;
    int trials = 100, colors = 3, max_size = 6, k = 3;
    double slack = kCertSlack, spread = 1.0;

    CLI::App* pierce = app.add_subcommand("pierce", "compute a piercing certificate");
    pierce->add_option("--input", input, "instance JSON")->required();
    pierce->add_option("--method", method,
                       "auto|symmetric|jung|triangle|disk|four-color");
    pierce->add_option("--out", out, "certificate output path (default stdout)");
    pierce->add_option("--slack", slack, "certificate slack override");

    CLI::App* verify = app.add_subcommand("verify", "check a certificate");
    verify->add_option("--input", input, "instance JSON")->required();
    verify->add_option("--cert", cert_path, "certificate JSON")->required();
    verify->add_option("--slack", slack, "certificate slack override");

    CLI::App* fuzz = app.add_subcommand("fuzz", "generate, pierce and verify");
    fuzz->add_option("--trials", trials, "number of instances");
    fuzz->add_option("--seed", seed, "base seed");
    fuzz->add_option("--body", body,
                     "disk|square|rectangle|hexagon|random-symmetric|triangle|"
                     "random-triangle");
    fuzz->add_option("--colors", colors, "number of color classes");
    fuzz->add_option("--max-size", max_size, "maximum family size");
    fuzz->add_option("--spread", spread, "sampling spread");
    fuzz->add_option("--out", out, "failures file (JSON lines)");

    CLI::App* explore = app.add_subcommand("explore", "probe the general-k bound");
    explore->add_option("--trials", trials, "number of trials");
    explore->add_option("--seed", seed, "base seed");
    explore->add_option("--body", body, "generator body kind");
    explore->add_option("--k", k, "number of color classes");
    explore->add_option("--max-size", max_size, "maximum family size");
    explore->add_option("--out", out, "log file (JSON lines)");

    CLI::App* render = app.add_subcommand("render", "draw instance + certificate");
    render->add_option("--input", input, "instance JSON")->required();
    render->add_option("--cert", cert_path, "certificate JSON")->required();
    render->add_option("--out", out, "SVG output path")->required();

    CLI::App* jung = app.add_subcommand("jung", "Jung radius of a gauge");
    jung->add_option("--body", body, "named body kind");
    jung->add_option("--input", input, "body JSON (overrides --body)");
    jung->add_option("--seed", seed, "seed for random bodies");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (pierce->parsed()) return cmd_pierce(input, method, out, slack);
        if (verify->parsed()) return cmd_verify(input, cert_path, slack);
        if (fuzz->parsed())
            return cmd_fuzz(trials, seed, body, colors, max_size, spread, out);
        if (explore->parsed())
            return cmd_explore(trials, seed, body, k, max_size, out);
        if (render->parsed()) return cmd_render(input, cert_path, out);
        if (jung->parsed()) return cmd_jung(body, input, seed);
    } catch (const InvalidInstanceError& e) {
        std::cerr << "invalid instance: " << e.what() << "\n";
        return 2;
    } catch (const TheoremViolationError& e) {
        std::cerr << "internal violation: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
