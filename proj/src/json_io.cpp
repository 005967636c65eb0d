#include "padictk/json_io.hpp"

#include <sstream>

namespace padictk {

Json padic_to_json(const PadicNumber& x) {
    Json j;
    j["p"] = x.p();
    if (x.is_zero()) {
        j["zero_at_precision"] = x.abs_prec();
        return j;
    }
    j["valuation"] = x.val();
    j["unit_mod_pN"] = x.unit().get_str();
    j["precision"] = x.rel_prec();
    return j;
}

Json series_to_json(const IwasawaSeries& f) {
    Json j;
    j["p"] = f.p();
    j["N"] = f.N();
    j["M"] = f.M();
    Json coeffs = Json::array();
    for (long i = 0; i < f.M(); ++i) coeffs.push_back(f.coeff(i).get_str());
    j["coeffs"] = coeffs;
    return j;
}

IwasawaSeries series_from_json(const Json& j) {
    long p = j.at("p").get<long>();
    long N = j.at("N").get<long>();
    long M = j.at("M").get<long>();
    std::vector<Int> c;
    for (const auto& s : j.at("coeffs"))
        c.push_back(Int(s.get<std::string>()));
    return IwasawaSeries::from_coeffs(p, N, M, std::move(c));
}

Json character_to_json(const DirichletCharacter& chi) {
    Json j;
    j["modulus"] = chi.modulus();
    j["order"] = chi.order();
    Json gens = Json::array();
    for (const auto& gi : chi.generator_images())
        gens.push_back(Json::array({gi.g, gi.chi_exponent}));
    j["generator_images"] = gens;
    return j;
}

DirichletCharacter character_from_json(const Json& j) {
    long f = j.at("modulus").get<long>();
    long m = j.at("order").get<long>();
    std::vector<std::pair<long, long>> images;
    for (const auto& pair : j.at("generator_images"))
        images.push_back({pair.at(0).get<long>(), pair.at(1).get<long>()});
    return DirichletCharacter::from_generator_images(f, images, m);
}

DirichletCharacter parse_character(const std::string& spec, long p) {
    // products split on '*'
    size_t star = spec.find('*');
    if (star != std::string::npos) {
        auto lhs = parse_character(spec.substr(0, star), p);
        auto rhs = parse_character(spec.substr(star + 1), p);
        return lhs * rhs;
    }
    if (spec.empty()) throw MathError("BadInput", "empty character spec");
    if (spec.front() == '{') return character_from_json(Json::parse(spec));
    if (spec == "trivial" || spec == "1") return DirichletCharacter::trivial(1);
    if (spec.rfind("omega", 0) == 0) {
        long k = 1;
        size_t caret = spec.find('^');
        if (caret != std::string::npos) k = std::stol(spec.substr(caret + 1));
        return DirichletCharacter::omega(p).power(k);
    }
    if (spec.rfind("kronecker(", 0) == 0 && spec.back() == ')') {
        long D = std::stol(spec.substr(10, spec.size() - 11));
        return DirichletCharacter::kronecker_character(D);
    }
    throw MathError("BadInput", "unrecognized character spec: " + spec);
}

Rat rat_from_string(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

namespace {

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    return rat_from_string(j.get<std::string>());
}

}  // namespace

HeckeParams hecke_from_json(const Json& j) {
    HeckeParams f;
    f.p = j.at("p").get<long>();
    f.k = j.at("k").get<long>();
    f.alpha = rat_from_json(j.at("alpha"));
    if (j.contains("beta")) {
        f.beta = rat_from_json(j.at("beta"));
        f.eps_p = j.contains("eps_p") ? rat_from_json(j.at("eps_p")) : Rat(1);
    } else {
        // arithmetic mode: derive beta from eps_p
        Rat eps = j.contains("eps_p") ? rat_from_json(j.at("eps_p")) : Rat(1);
        return HeckeParams::arithmetic(f.p, f.k, f.alpha, eps);
    }
    return f;
}

CMChar cm_from_json(const Json& j) {
    CMChar c;
    c.p = j.at("p").get<long>();
    c.w = j.at("w").get<long>();
    c.eps_p = j.contains("eps_p") ? rat_from_json(j.at("eps_p")) : Rat(1);
    if (j.contains("psi_p")) {
        c.psi_p = rat_from_json(j.at("psi_p"));
        c.psi_pbar = rat_from_json(j.at("psi_pbar"));
        return c;
    }
    return CMChar::arithmetic(c.p, c.w, rat_from_json(j.at("psi_pbar")), c.eps_p);
}

FreeMap freemap_from_json(const Json& j) {
    const auto& r = j.at("ring");
    auto R = std::make_shared<ChainRing>(r.at("p").get<long>(),
                                         r.at("a").get<int>(),
                                         r.at("b").get<int>());
    const auto& rows = j.at("matrix");
    long n = (long)rows.size();
    if (n == 0) throw MathError("BadInput", "empty matrix");
    long m = (long)rows.at(0).size();
    std::vector<RingElem> entries;
    for (const auto& row : rows) {
        if ((long)row.size() != m) throw MathError("BadInput", "ragged matrix");
        for (const auto& cell : row) {
            if (cell.is_number_integer()) {
                long v = cell.get<long>();
                entries.push_back(RingElem(
                    R, {(std::uint64_t)(((v % (long)R->pa()) + (long)R->pa()) %
                                        (long)R->pa())}));
            } else {
                std::vector<std::uint64_t> c;
                for (const auto& x : cell) {
                    long v = x.get<long>();
                    c.push_back((std::uint64_t)(((v % (long)R->pa()) + (long)R->pa()) %
                                                (long)R->pa()));
                }
                entries.push_back(RingElem(R, std::move(c)));
            }
        }
    }
    return FreeMap::from_entries(R, n, m, std::move(entries));
}

Json ring_elem_to_json(const RingElem& x) {
    Json arr = Json::array();
    for (auto c : x.coeffs()) arr.push_back(c);
    return arr;
}

}  // namespace padictk
