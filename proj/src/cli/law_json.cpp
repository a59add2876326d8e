#include "monochrome/law_json.hpp"

#include "monochrome/errors.hpp"

namespace monochrome {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace

nlohmann::ordered_json law_to_json(const LimitLaw& law) {
    nlohmann::ordered_json j;
    j["schema"] = kLawSchema;
    std::visit(overloaded{
                   [&](const law::Poisson& p) {
                       j["kind"] = "Poisson";
                       j["mean"] = p.mean;
                   },
                   [&](const law::PoissonMixture& p) {
                       j["kind"] = "PoissonMixture";
                       std::visit(overloaded{[&](const law::PointMass& m) {
                                                 j["mixing"] = {{"kind", "PointMass"}, {"value", m.value}};
                                             },
                                             [&](const law::PoissonMixing& m) {
                                                 j["mixing"] = {{"kind", "PoissonMixing"}, {"mean", m.mean}};
                                             },
                                             [&](const law::EmpiricalMixing& m) {
                                                 j["mixing"] = {{"kind", "Empirical"}, {"samples", m.samples}};
                                             }},
                                  p.mixing);
                   },
                   [&](const law::Normal& p) {
                       j["kind"] = "Normal";
                       j["mean"] = p.mean;
                       j["variance"] = p.variance;
                   },
                   [&](const law::WeightedChiSquare& p) {
                       j["kind"] = "WeightedChiSquare";
                       j["weights"] = p.weights;
                       j["dof"] = p.dof;
                       j["scale"] = p.scale;
                   },
                   [&](const law::AtomPlusNormal& p) {
                       j["kind"] = "AtomPlusNormal";
                       j["atom"] = p.atom;
                       j["variance"] = p.variance;
                   },
               },
               law);
    return j;
}

LimitLaw law_from_json(const nlohmann::json& j) {
    try {
        const std::string kind = j.at("kind").get<std::string>();
        LimitLaw law;
        if (kind == "Poisson") {
            law = law::Poisson{j.at("mean").get<double>()};
        } else if (kind == "PoissonMixture") {
            const auto& m = j.at("mixing");
            const std::string mk = m.at("kind").get<std::string>();
            if (mk == "PointMass") law = law::PoissonMixture{law::PointMass{m.at("value").get<double>()}};
            else if (mk == "PoissonMixing") law = law::PoissonMixture{law::PoissonMixing{m.at("mean").get<double>()}};
            else if (mk == "Empirical")
                law = law::PoissonMixture{law::EmpiricalMixing{m.at("samples").get<std::vector<double>>()}};
            else fail(ErrorCode::ParseError, "unknown mixing kind '" + mk + "'");
        } else if (kind == "Normal") {
            law = law::Normal{j.at("mean").get<double>(), j.at("variance").get<double>()};
        } else if (kind == "WeightedChiSquare") {
            law = law::WeightedChiSquare{j.at("weights").get<std::vector<double>>(), j.at("dof").get<double>(),
                                         j.at("scale").get<double>()};
        } else if (kind == "AtomPlusNormal") {
            law = law::AtomPlusNormal{j.at("atom").get<double>(), j.at("variance").get<double>()};
        } else {
            fail(ErrorCode::ParseError, "unknown law kind '" + kind + "'");
        }
        validate(law);
        return law;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, std::string("malformed law JSON: ") + e.what());
    }
}

}  // namespace monochrome
