#include "minf/json_io.hpp"

#include <limits>
#include <sstream>

#include <json.hpp>

namespace minf {

namespace {

using ordered_json = nlohmann::ordered_json;

long long to_ll(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v < lo || v > hi) throw JsonError("integer too large for JSON output");
    return v.convert_to<long long>();
}

std::string rat_string(const Rat& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

std::string term_string(const Rat& expo, const Int& coeff, bool first) {
    std::ostringstream os;
    const bool neg = coeff < 0;
    const Int mag = neg ? Int(-coeff) : coeff;
    if (first) {
        if (neg) os << "-";
    } else {
        os << (neg ? " - " : " + ");
    }
    if (mag != 1) os << mag.str() << "*";
    const Int num = boost::multiprecision::numerator(expo);
    const Int den = boost::multiprecision::denominator(expo);
    if (den == 1) {
        os << "t^" << num.str();
    } else {
        os << "t^(" << num.str() << "/" << den.str() << ")";
    }
    return os.str();
}

}  // namespace

SupportSpec support_spec_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& ex) {
        throw JsonError(std::string("invalid JSON: ") + ex.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("support"))
        throw JsonError("expected an object with \"n\" and \"support\"");
    SupportSpec spec;
    if (!j["n"].is_number_integer()) throw JsonError("\"n\" must be an integer");
    spec.n = j["n"].get<int>();
    if (!j["support"].is_array()) throw JsonError("\"support\" must be an array");
    for (const auto& row : j["support"]) {
        if (!row.is_array()) throw JsonError("support entries must be arrays");
        Vec v;
        for (const auto& c : row) {
            if (!c.is_number_integer()) throw JsonError("exponents must be integers");
            v.push_back(Int(c.get<long long>()));
        }
        spec.support.push_back(std::move(v));
    }
    if (j.contains("coefficients") && !j["coefficients"].is_null()) {
        if (!j["coefficients"].is_array())
            throw JsonError("\"coefficients\" must be an array");
        spec.coefficients.emplace();
        for (const auto& pair : j["coefficients"]) {
            if (!pair.is_array() || pair.size() != 2 ||
                !pair[0].is_number_integer() || !pair[1].is_number_integer())
                throw JsonError("coefficients must be [numerator, denominator] pairs");
            const long long num = pair[0].get<long long>();
            const long long den = pair[1].get<long long>();
            if (den == 0) throw JsonError("zero coefficient denominator");
            spec.coefficients->push_back(Rat(Int(num), Int(den)));
        }
    }
    try {
        spec.validate();
    } catch (const std::exception& ex) {
        throw JsonError(ex.what());
    }
    return spec;
}

std::string support_spec_to_json(const SupportSpec& spec) {
    ordered_json j;
    j["n"] = spec.n;
    j["support"] = ordered_json::array();
    for (const Vec& v : spec.support) {
        ordered_json row = ordered_json::array();
        for (const Int& c : v) row.push_back(to_ll(c));
        j["support"].push_back(std::move(row));
    }
    if (spec.coefficients) {
        j["coefficients"] = ordered_json::array();
        for (const Rat& r : *spec.coefficients)
            j["coefficients"].push_back(
                {to_ll(boost::multiprecision::numerator(r)),
                 to_ll(boost::multiprecision::denominator(r))});
    }
    return j.dump();
}

std::string zeta_to_text(const ZetaFactorization& z) {
    if (z.factors().empty()) return "1";
    std::ostringstream os;
    for (const auto& [d, e] : z.factors()) {
        os << "(1-t";
        if (d != 1) os << "^" << d.str();
        os << ")";
        if (e != 1) os << "^" << e.str();
    }
    return os.str();
}

std::string zeta_to_json(const ZetaFactorization& z) {
    ordered_json j;
    j["factors"] = ordered_json::array();
    for (const auto& [d, e] : z.factors())
        j["factors"].push_back({to_ll(d), to_ll(e)});
    j["degree"] = to_ll(z.degree());
    return j.dump();
}

std::string spectrum_to_text(const SpectrumPoly& sp) {
    if (sp.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [expo, coeff] : sp.terms) {
        os << term_string(expo, coeff, first);
        first = false;
    }
    return os.str();
}

std::string spectrum_to_json(const SpectrumPoly& sp) {
    ordered_json j;
    j["terms"] = ordered_json::array();
    for (const auto& [expo, coeff] : sp.terms)
        j["terms"].push_back({rat_string(expo), to_ll(coeff)});
    return j.dump();
}

std::string jordan_to_text(const JordanTable& jt) {
    if (jt.eigenvalues.empty()) return "empty\n";
    std::ostringstream os;
    for (const auto& [alpha, entry] : jt.eigenvalues) {
        os << "eigenvalue " << alpha.to_string() << ": multiplicity "
           << entry.multiplicity.str() << ", blocks [";
        bool first = true;
        for (const auto& [size, cnt] : entry.blocks) {
            if (!first) os << ", ";
            os << cnt.str() << " x J" << size;
            first = false;
        }
        os << "], " << (entry.complete ? "complete" : "partial") << "\n";
    }
    return os.str();
}

std::string jordan_to_json(const JordanTable& jt) {
    ordered_json j;
    j["eigenvalues"] = ordered_json::array();
    for (const auto& [alpha, entry] : jt.eigenvalues) {
        ordered_json e;
        e["eigenvalue"] = alpha.to_string();
        e["multiplicity"] = to_ll(entry.multiplicity);
        e["blocks"] = ordered_json::array();
        for (const auto& [size, cnt] : entry.blocks)
            e["blocks"].push_back({size, to_ll(cnt)});
        e["complete"] = entry.complete;
        j["eigenvalues"].push_back(std::move(e));
    }
    return j.dump();
}

std::string hodge_to_text(const HodgeClass& h) {
    std::ostringstream os;
    os << "full: " << (h.full ? "true" : "false") << "\n";
    for (const auto& [key, val] : h.table.entries()) {
        const auto& [p, q, alpha] = key;
        os << "e[" << p << "," << q << "](" << alpha.to_string()
           << ") = " << val.str() << "\n";
    }
    for (const auto& [key, val] : h.rows.entries())
        os << "row[" << key.first << "](" << key.second.to_string()
           << ") = " << val.str() << "\n";
    return os.str();
}

std::string hodge_to_json(const HodgeClass& h) {
    ordered_json j;
    j["full"] = h.full;
    j["entries"] = ordered_json::array();
    for (const auto& [key, val] : h.table.entries()) {
        const auto& [p, q, alpha] = key;
        j["entries"].push_back({p, q, alpha.to_string(), to_ll(val)});
    }
    j["rows"] = ordered_json::array();
    for (const auto& [key, val] : h.rows.entries())
        j["rows"].push_back({key.first, key.second.to_string(), to_ll(val)});
    return j.dump();
}

namespace {

std::string functional_string(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

}  // namespace

std::string ehrhart_to_text(const NewtonAtInfinity& newton) {
    std::ostringstream os;
    for (const FaceAtInfinity& g : newton.faces_at_infinity) {
        const TwistedCharacter chi = TwistedCharacter::from_heights(g);
        const EhrhartTwistData data = phi_psi_coefficients(g.delta, chi);
        os << "face " << functional_string(g.face.supporting_functional)
           << " dim " << g.gamma_dim << " d " << g.d.str() << "\n";
        for (const RootOfUnity& a : data.alphas()) {
            os << "  phi(" << a.to_string() << ") =";
            for (int i = 0; i <= data.n + 1; ++i)
                os << " " << data.phi_at(a, i).str();
            os << "\n  psi(" << a.to_string() << ") =";
            for (int i = 0; i <= data.n + 1; ++i)
                os << " " << data.psi_at(a, i).str();
            os << "\n";
        }
    }
    return os.str();
}

std::string ehrhart_to_json(const NewtonAtInfinity& newton) {
    ordered_json j;
    j["faces"] = ordered_json::array();
    for (const FaceAtInfinity& g : newton.faces_at_infinity) {
        const TwistedCharacter chi = TwistedCharacter::from_heights(g);
        const EhrhartTwistData data = phi_psi_coefficients(g.delta, chi);
        ordered_json f;
        ordered_json functional = ordered_json::array();
        for (const Int& c : g.face.supporting_functional)
            functional.push_back(to_ll(c));
        f["functional"] = std::move(functional);
        f["dim"] = g.gamma_dim;
        f["d"] = to_ll(g.d);
        f["phi"] = ordered_json::object();
        f["psi"] = ordered_json::object();
        for (const RootOfUnity& a : data.alphas()) {
            ordered_json phi_row = ordered_json::array();
            ordered_json psi_row = ordered_json::array();
            for (int i = 0; i <= data.n + 1; ++i) {
                phi_row.push_back(to_ll(data.phi_at(a, i)));
                psi_row.push_back(to_ll(data.psi_at(a, i)));
            }
            f["phi"][a.to_string()] = std::move(phi_row);
            f["psi"][a.to_string()] = std::move(psi_row);
        }
        j["faces"].push_back(std::move(f));
    }
    return j.dump();
}

std::string reports_to_text(const std::vector<CheckReport>& reports) {
    std::ostringstream os;
    for (const CheckReport& r : reports) {
        os << (r.pass ? "PASS" : "FAIL") << " " << r.check;
        if (!r.pass) {
            os << " [" << r.instance << "]";
            if (!r.left.empty() || !r.right.empty())
                os << " got=" << r.left << " expected=" << r.right;
        }
        os << "\n";
    }
    return os.str();
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
    ordered_json j;
    j["checks"] = ordered_json::array();
    bool all = true;
    for (const CheckReport& r : reports) {
        ordered_json c;
        c["check"] = r.check;
        c["instance"] = r.instance;
        c["pass"] = r.pass;
        c["left"] = r.left;
        c["right"] = r.right;
        j["checks"].push_back(std::move(c));
        all = all && r.pass;
    }
    j["pass"] = all;
    return j.dump();
}

}  // namespace minf
