#include "nmil/report.hpp"

#include <atomic>
#include <memory>
#include <thread>

namespace nmil {

namespace {

Json vec_json(const IntVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_long(x));
    return a;
}

Json faces_json(const NewtonPolyhedron& np) {
    Json arr = Json::array();
    for (const auto& f : np.compact_faces) {
        Json e;
        e["dim"] = f.poly.dim;
        Json verts = Json::array();
        for (const auto& v : f.poly.vertices) verts.push_back(vec_json(v));
        e["vertices"] = verts;
        e["d"] = to_long(f.d);
        Json I = Json::array();
        for (int i : f.I) I.push_back(i + 1);
        e["I"] = I;
        e["extremal"] = f.extremal;
        e["maximal"] = f.maximal;
        arr.push_back(e);
    }
    return arr;
}

Json zeta_json(const NewtonPolyhedron& np) {
    Json factors = Json::object();
    for (const auto& [d, e] : zeta(np).factors) {
        std::ostringstream os;
        os << d;
        factors[os.str()] = to_long(e);
    }
    Json z;
    z["factors"] = factors;
    return z;
}

Json epoly_json(const EPolynomial& E) {
    Json arr = Json::array();
    for (const auto& [m, c] : E.coeffs.c) {
        Json t = Json::array();
        t.push_back(m[0]);
        t.push_back(m[1]);
        t.push_back(to_long(c));
        arr.push_back(t);
    }
    return arr;
}

Json puiseux_json(const PuiseuxPoly& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.c) {
        Json t = Json::array();
        t.push_back(rat_str(e));
        t.push_back(to_long(c));
        arr.push_back(t);
    }
    return arr;
}

struct EigenEntry {
    Json json;
    std::vector<std::string> warnings;
};

EigenEntry eigen_entry(const NewtonPolyhedron& np, const WeightedComplex* wc,
                       const RotationNumber& lambda) {
    EvalContext ctx;
    EigenEntry out;
    Json e;
    e["theta"] = lambda.str();
    bool bad = in_bad_set(np, lambda);
    bool invariant_ok = !np.convenient && np.dimP == np.n && !bad && wc != nullptr;

    if (!bad && np.dimP == np.n) {
        e["multiplicity"] = to_long(multiplicity(np, lambda));
    } else {
        out.warnings.push_back("theta=" + lambda.str() +
                               (bad ? ": in R_f, multiplicity formula not licensed"
                                    : ": dim P < n, multiplicity unavailable"));
    }
    e["E"] = epoly_json(e_poly(ctx, np, lambda));
    if (invariant_ok) {
        JordanTable jt = jordan_blocks(ctx, np, *wc, lambda);
        Json j = Json::object();
        for (const auto& [k, c] : jt.counts) j[std::to_string(k)] = to_long(c);
        e["jordan"] = j;
        if (!lambda.is_one()) e["spectrum"] = puiseux_json(spectrum_lambda(ctx, np, *wc, lambda.theta));
    } else if (!bad) {
        out.warnings.push_back("theta=" + lambda.str() +
                               ": jordan/spectrum need a non-convenient input with dim P = n");
    } else {
        out.warnings.push_back("theta=" + lambda.str() + ": in R_f, jordan/spectrum not licensed");
    }
    out.json = std::move(e);
    return out;
}

}  // namespace

Command parse_command(const std::string& name) {
    if (name == "faces") return Command::Faces;
    if (name == "zeta") return Command::Zeta;
    if (name == "rf") return Command::Rf;
    if (name == "epoly") return Command::Epoly;
    if (name == "jordan") return Command::Jordan;
    if (name == "spectrum") return Command::Spectrum;
    if (name == "full-spectrum") return Command::FullSpectrum;
    if (name == "report") return Command::Report;
    throw user_error("unknown command: " + name);
}

Support support_from_json(const Json& j) {
    if (!j.contains("n") || !j.contains("monomials"))
        throw user_error("json input needs fields \"n\" and \"monomials\"");
    int n = j["n"].get<int>();
    std::vector<IntVec> monomials;
    for (const auto& row : j["monomials"]) {
        IntVec m;
        for (const auto& e : row) m.push_back(Int(e.get<long>()));
        monomials.push_back(std::move(m));
    }
    return Support::make(n, std::move(monomials));
}

Json run_job(const JobSpec& job) {
    NewtonPolyhedron np = build_newton(job.support);

    Json out;
    out["n"] = np.n;
    Json supp = Json::array();
    for (const auto& m : np.support.monomials) supp.push_back(vec_json(m));
    out["support"] = supp;
    out["convenient"] = np.convenient;
    out["dimP"] = np.dimP;
    std::vector<std::string> warnings;
    if (np.dimP < np.n) warnings.push_back("dim P < n: invariant operations are unavailable");

    const bool want_eigen = job.command == Command::Epoly || job.command == Command::Jordan ||
                            job.command == Command::Spectrum || job.command == Command::Report;

    if (job.command == Command::Faces || job.command == Command::Report)
        out["faces"] = faces_json(np);
    if (job.command == Command::Zeta || job.command == Command::Report)
        out["zeta"] = zeta_json(np);
    if (job.command == Command::Rf || job.command == Command::Report) {
        Json rf = Json::array();
        for (const auto& r : bad_eigenvalues(np)) rf.push_back(r.str());
        out["Rf"] = rf;
    }

    if (want_eigen) {
        std::vector<RotationNumber> lambdas;
        if (job.all_good || (job.command == Command::Report && job.thetas.empty())) {
            lambdas = good_eigenvalues(np);
        } else {
            if (job.thetas.empty())
                throw user_error("no eigenvalue selected: pass --theta a/b or --all-good");
            for (const auto& t : job.thetas) lambdas.emplace_back(t);
        }
        std::sort(lambdas.begin(), lambdas.end());
        lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());

        std::unique_ptr<WeightedComplex> wc;
        if (np.dimP == np.n) wc = std::make_unique<WeightedComplex>(build_complex(np));

        std::vector<EigenEntry> entries(lambdas.size());
        int threads = std::max(1, job.threads);
        if (threads == 1 || lambdas.size() <= 1) {
            for (size_t i = 0; i < lambdas.size(); ++i)
                entries[i] = eigen_entry(np, wc.get(), lambdas[i]);
        } else {
            // immutable shared inputs, one evaluation context per task
            std::vector<std::thread> pool;
            std::atomic<size_t> next{0};
            std::vector<std::exception_ptr> errors(threads);
            for (int t = 0; t < threads; ++t) {
                pool.emplace_back([&, t] {
                    try {
                        for (;;) {
                            size_t i = next.fetch_add(1);
                            if (i >= lambdas.size()) break;
                            entries[i] = eigen_entry(np, wc.get(), lambdas[i]);
                        }
                    } catch (...) {
                        errors[t] = std::current_exception();
                    }
                });
            }
            for (auto& th : pool) th.join();
            for (auto& e : errors)
                if (e) std::rethrow_exception(e);
        }

        Json arr = Json::array();
        for (auto& e : entries) {
            arr.push_back(std::move(e.json));
            for (auto& w : e.warnings) warnings.push_back(std::move(w));
        }
        out["eigenvalues"] = arr;
    }

    if (job.command == Command::FullSpectrum || job.command == Command::Report) {
        EvalContext ctx;
        out["full_spectrum"] = puiseux_json(full_spectrum(ctx, np));
    }

    Json w = Json::array();
    for (const auto& s : warnings) w.push_back(s);
    out["warnings"] = w;
    return out;
}

}  // namespace nmil
