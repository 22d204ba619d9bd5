// Command-line surface: census, fibers, packet, example, verify.
// Exit codes: 0 success, 1 verification failure, 2 usage error.
// MACVOGAN_BUDGET overrides the oracle element budget.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "macvogan/serialization.hpp"
#include "macvogan/verify.hpp"

using namespace macvogan;

namespace {

void emit_json(const json& j) { std::cout << j.dump() << "\n"; }

std::string fiber_csv(const json& fiber) {
    std::string s;
    for (const auto& idx : fiber) s += (s.empty() ? "" : ",") + idx.dump();
    return s;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

int run_census(const std::string& group, int64_t n, int64_t q, const std::string& format) {
    auto field = FieldParams::make(q);
    if (group == "gl") {
        auto census = enumerate_degree(field, n);
        if (format == "json") {
            json labels = json::array();
            for (const auto& m : census) labels.push_back(to_json(m));
            emit_json({{"N", n},
                       {"q", q},
                       {"group", "gl"},
                       {"total", static_cast<int64_t>(census.size())},
                       {"labels", labels}});
        } else {
            std::cout << "index\tlabel\n";
            for (std::size_t i = 0; i < census.size(); ++i)
                std::cout << i << "\t" << census[i].str() << "\n";
        }
        return 0;
    }
    auto record = sl_census_record(field, n);
    int64_t total = 0;
    for (const auto& cls : record.at("classes")) total += cls.at("stab_order").get<int64_t>();
    if (format == "json") {
        record["group"] = "sl";
        record["total"] = total;
        emit_json(record);
    } else {
        std::cout << "representative\tstab_order\tfiber\n";
        for (const auto& cls : record.at("classes"))
            std::cout << partition_fn_from_json(cls.at("representative")).str() << "\t"
                      << cls.at("stab_order").get<int64_t>() << "\t"
                      << fiber_csv(cls.at("fiber")) << "\n";
        std::cout << "total\t" << total << "\n";
    }
    return 0;
}

int run_fibers(int64_t n, int64_t q, const std::string& class_file, const std::string& format) {
    auto field = FieldParams::make(q);
    json record;
    if (class_file.empty()) {
        record = sl_census_record(field, n);
    } else {
        auto m = partition_fn_from_json(read_json_file(class_file));
        if (m.q != q) throw domain_error("fibers: --class file has a different q");
        if (m.degree() != n) throw domain_error("fibers: --class file has a different degree");
        record = {{"q", q}, {"N", n}, {"classes", json::array({mv_class_record(mv_class_of(m))})}};
    }
    if (format == "json") {
        emit_json(record);
    } else {
        std::cout << "representative\tstab_order\tfiber\n";
        for (const auto& cls : record.at("classes"))
            std::cout << partition_fn_from_json(cls.at("representative")).str() << "\t"
                      << cls.at("stab_order").get<int64_t>() << "\t"
                      << fiber_csv(cls.at("fiber")) << "\n";
    }
    return 0;
}

int run_packet(const std::string& param_file, const std::string& format) {
    auto p = tame_parameter_from_json(read_json_file(param_file));
    auto cls = sl_canonicalize(p);
    auto full = stab_full(cls.canonical);
    auto mv = hp_sl_packet(cls);
    auto hat = iota_hat(cls.canonical);
    auto [ker, im] = hom_kernel_image(hat);

    json members = json::array();
    for (const auto& psi : dual_group(full).elements()) {
        json heads = json::array();
        for (const auto& label : hp_sl_member(cls, psi)) heads.push_back(label.torsor_index);
        members.push_back({{"psi", psi}, {"head_labels", heads}});
    }

    json out = {{"q", p.q},
                {"N", p.n},
                {"canonical", to_json(cls.canonical)},
                {"component_group_L",
                 {{"order", full.order()}, {"invariant_factors", full.invariant_factors()}}},
                {"component_group_inertial",
                 {{"order", mv.stab.order()}, {"invariant_factors", mv.stab.invariant_factors()}}},
                {"l_packet_size", full.order()},
                {"mv_class", mv_class_record(mv)},
                {"mv_fiber_size", mv.stab.order()},
                {"iota_hat",
                 {{"injective", ker.order() == 1},
                  {"surjective", im.order() == hat.target.order()},
                  {"kernel_order", ker.order()}}},
                {"members", members},
                {"compatibility", check_compatibility_packet(p)},
                {"finalcomp", check_finalcomp(cls)}};
    if (format == "json") {
        emit_json(out);
    } else {
        std::cout << "canonical\t" << to_json(cls.canonical).dump() << "\n"
                  << "l_packet_size\t" << full.order() << "\n"
                  << "mv_fiber_size\t" << mv.stab.order() << "\n"
                  << "iota_hat_injective\t" << (ker.order() == 1 ? "true" : "false") << "\n"
                  << "iota_hat_surjective\t"
                  << (im.order() == hat.target.order() ? "true" : "false") << "\n"
                  << "compatibility\t" << (out.at("compatibility").get<bool>() ? "true" : "false")
                  << "\n"
                  << "finalcomp\t" << (out.at("finalcomp").get<bool>() ? "true" : "false") << "\n";
    }
    return 0;
}

int run_example(const std::string& which, int64_t n, int64_t q, int64_t e) {
    auto field = FieldParams::make(q);
    TameParameter p = [&] {
        if (which == "surjectivity") return make_example1(field, n);
        if (e == 0) {
            for (int64_t cand = 2; cand <= std::gcd(q - 1, n); ++cand)
                if ((q - 1) % cand == 0 && n % cand == 0) {
                    e = cand;
                    break;
                }
            if (e == 0)
                throw domain_error("example: no common divisor e > 1 of q-1 and N; pass --e");
        }
        return make_example2(field, n, e);
    }();

    auto full = stab_full(p);
    auto mv = mv_class_of(inertial_class(p));
    auto hat = iota_hat(p);
    auto [ker, im] = hom_kernel_image(hat);

    std::cout << "example " << which << " N=" << n << " q=" << q;
    if (which == "injectivity") std::cout << " e=" << e;
    std::cout << "\n"
              << "component group (L-packet): order " << full.order() << "\n"
              << "component group (inertial): order " << mv.stab.order() << "\n"
              << "L-packet size: " << full.order() << "\n"
              << "MV fiber size: " << mv.stab.order() << "\n"
              << "iota_hat injective=" << (ker.order() == 1 ? "true" : "false")
              << " surjective=" << (im.order() == hat.target.order() ? "true" : "false")
              << " kernel order=" << ker.order() << "\n";
    return 0;
}

int run_verify(const std::string& suite, int64_t n, int64_t q, uint64_t seed) {
    auto field = FieldParams::make(q);
    auto results = verify_suite(suite, field, n, seed);
    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "ok " : "FAIL ") << r.name;
        if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
        std::cout << "\n";
        all_pass = all_pass && r.pass;
    }
    std::cout << (all_pass ? "verify: all checks passed" : "verify: FAILURES") << "\n";
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) try {
    CLI::App app{"Exact Macdonald-Vogan correspondence calculator for SL_N over finite fields"};
    app.require_subcommand(1);

    std::string group, format = "json", class_file, param_file, which;
    int64_t n = 0, q = 0, e = 0;
    uint64_t seed = 12345;
    std::string suite;

    auto* census = app.add_subcommand("census", "count labels / classes at (N, q)");
    census->add_option("--group", group, "gl or sl")
        ->required()
        ->check(CLI::IsMember({"gl", "sl"}));
    census->add_option("--n", n, "dimension N")->required();
    census->add_option("--q", q, "residue field size")->required();
    census->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));

    auto* fibers = app.add_subcommand("fibers", "fibers of the correspondence at (N, q)");
    fibers->add_option("--n", n)->required();
    fibers->add_option("--q", q)->required();
    fibers->add_option("--class", class_file, "JSON file with one label");
    fibers->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));

    auto* packet = app.add_subcommand("packet", "analyze one tame parameter");
    packet->add_option("--param", param_file, "JSON parameter file")->required();
    packet->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));

    auto* example = app.add_subcommand("example", "reproduce a counterexample family");
    example->add_option("--which", which)
        ->required()
        ->check(CLI::IsMember({"surjectivity", "injectivity"}));
    example->add_option("--n", n)->required();
    example->add_option("--q", q)->required();
    example->add_option("--e", e, "common divisor of q-1 and N (injectivity only)");

    auto* verify = app.add_subcommand("verify", "run property suites");
    verify->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember({"counting", "twist", "torsor", "examples", "all"}));
    verify->add_option("--n", n)->required();
    verify->add_option("--q", q)->required();
    verify->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
        if (census->parsed()) return run_census(group, n, q, format);
        if (fibers->parsed()) return run_fibers(n, q, class_file, format);
        if (packet->parsed()) return run_packet(param_file, format);
        if (example->parsed()) return run_example(which, n, q, e);
        if (verify->parsed()) return run_verify(suite, n, q, seed);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return 2;
    }
    return 0;
} catch (const capacity_error& err) {
    std::cerr << "capacity: " << err.what() << "\n";
    return 2;
} catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
}
