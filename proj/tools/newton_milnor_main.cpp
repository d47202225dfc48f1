#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "nmil/parse.hpp"
#include "nmil/report.hpp"

namespace {

using nmil::Json;

std::string human_table(const Json& r) {
    std::ostringstream os;
    os << "n = " << r["n"].get<int>() << ", dim P = " << r["dimP"].get<int>()
       << (r["convenient"].get<bool>() ? ", convenient" : ", not convenient") << "\n";
    os << "support:";
    for (const auto& m : r["support"]) {
        os << " (";
        for (size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i].get<long>();
        os << ")";
    }
    os << "\n";
    if (r.contains("faces")) {
        os << "compact faces (dim | vertices | d | I | class):\n";
        for (const auto& f : r["faces"]) {
            os << "  " << f["dim"].get<int>() << " | ";
            for (const auto& v : f["vertices"]) {
                os << "(";
                for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get<long>();
                os << ")";
            }
            os << " | d=" << f["d"].get<long>() << " | I={";
            for (size_t i = 0; i < f["I"].size(); ++i)
                os << (i ? "," : "") << f["I"][i].get<int>();
            os << "} | " << (f["extremal"].get<bool>() ? "extremal" : "admissible") << "\n";
        }
    }
    if (r.contains("zeta")) {
        os << "zeta: ";
        const auto& fac = r["zeta"]["factors"];
        if (fac.empty()) {
            os << "1";
        } else {
            for (auto it = fac.begin(); it != fac.end(); ++it) {
                os << "(1-t^" << it.key() << ")";
                long e = it.value().get<long>();
                if (e != 1) os << "^" << e;
            }
        }
        os << "\n";
    }
    if (r.contains("Rf")) {
        os << "R_f: {";
        for (size_t i = 0; i < r["Rf"].size(); ++i)
            os << (i ? ", " : "") << r["Rf"][i].get<std::string>();
        os << "}\n";
    }
    if (r.contains("eigenvalues")) {
        for (const auto& e : r["eigenvalues"]) {
            os << "theta = " << e["theta"].get<std::string>();
            if (e.contains("multiplicity")) os << ", multiplicity " << e["multiplicity"].get<long>();
            os << "\n";
            if (e.contains("E")) {
                os << "  E(u,v) =";
                if (e["E"].empty()) os << " 0";
                for (const auto& t : e["E"])
                    os << " + " << t[2].get<long>() << "*u^" << t[0].get<long>() << "*v^"
                       << t[1].get<long>();
                os << "\n";
            }
            if (e.contains("jordan")) {
                os << "  jordan blocks:";
                if (e["jordan"].empty()) os << " none";
                for (auto it = e["jordan"].begin(); it != e["jordan"].end(); ++it)
                    os << " size " << it.key() << " x" << it.value().get<long>();
                os << "\n";
            }
            if (e.contains("spectrum")) {
                os << "  spectrum:";
                if (e["spectrum"].empty()) os << " 0";
                for (const auto& t : e["spectrum"])
                    os << " + " << t[1].get<long>() << "*t^(" << t[0].get<std::string>() << ")";
                os << "\n";
            }
        }
    }
    if (r.contains("full_spectrum")) {
        os << "full spectrum:";
        if (r["full_spectrum"].empty()) os << " 0";
        for (const auto& t : r["full_spectrum"])
            os << " + " << t[1].get<long>() << "*t^(" << t[0].get<std::string>() << ")";
        os << "\n";
    }
    for (const auto& w : r["warnings"]) os << "warning: " << w.get<std::string>() << "\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Newton-polyhedron invariants of a hypersurface singularity at the origin"};
    app.require_subcommand(1);

    std::string expr, json_file, format = "human";
    std::vector<std::string> thetas;
    bool all_good = false;
    int threads = 1;

    std::vector<CLI::App*> subs;
    for (const char* name : {"faces", "zeta", "rf", "epoly", "jordan", "spectrum",
                             "full-spectrum", "report"}) {
        auto* s = app.add_subcommand(name);
        s->add_option("-e,--expr", expr, "polynomial, e.g. 'x1^7+x1^3*x2+x1^2*x2^4'");
        s->add_option("--json", json_file, "read {\"n\":...,\"monomials\":[[...]]} from a file");
        s->add_option("--theta", thetas, "eigenvalue exp(2*pi*i*theta), theta as a/b (repeatable)");
        s->add_flag("--all-good", all_good, "run over every good eigenvalue");
        s->add_option("--format", format, "human | json")
            ->check(CLI::IsMember({"human", "json"}));
        s->add_option("--threads", threads, "parallel eigenvalue evaluation");
        subs.push_back(s);
    }

    CLI11_PARSE(app, argc, argv);

    try {
        nmil::JobSpec job;
        job.command = nmil::parse_command(app.get_subcommands().front()->get_name());
        if (!expr.empty() && !json_file.empty())
            throw nmil::user_error("pass either --expr or --json, not both");
        if (!expr.empty()) {
            job.support = nmil::parse_polynomial(expr);
        } else if (!json_file.empty()) {
            std::ifstream in(json_file);
            if (!in) throw nmil::user_error("cannot open " + json_file);
            Json j = Json::parse(in, nullptr, true);
            job.support = nmil::support_from_json(j);
        } else {
            throw nmil::user_error("no input: pass --expr or --json");
        }
        for (const auto& t : thetas) job.thetas.push_back(nmil::parse_rat(t));
        job.all_good = all_good;
        job.threads = threads;

        Json out = nmil::run_job(job);
        if (format == "json")
            std::cout << out.dump(2) << "\n";
        else
            std::cout << human_table(out);
        return 0;
    } catch (const nmil::user_error& e) {
        Json err{{"error", "user"}, {"detail", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        Json err{{"error", "internal"}, {"detail", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    }
}
