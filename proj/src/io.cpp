#include "nqs/io.hpp"

#include <cstdio>

#include "nqs/errors.hpp"

namespace nqs {

namespace {

Json indices(const IndexSet& s) { return Json(s); }

Json hash_or_null(const ToeplitzHash& h) { return h.input_bits() == 0 ? Json(nullptr) : to_json(h); }

}  // namespace

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Json to_json(const ProbabilityTable& table) {
  Json regs = Json::array();
  for (const auto& r : table.registers()) regs.push_back({{"name", r.name}, {"size", r.size}});
  Json probs = Json::array();
  for (Eigen::Index i = 0; i < table.cells(); ++i) probs.push_back(table.probs()(i));
  return {{"registers", regs}, {"probs", probs}};
}

JointDistribution distribution_from_json(const Json& j) {
  try {
    std::vector<Register> regs;
    for (const auto& r : j.at("registers")) regs.push_back({r.at("name").get<std::string>(), r.at("size").get<int>()});
    const auto& probs = j.at("probs");
    Eigen::VectorXd p(static_cast<Eigen::Index>(probs.size()));
    for (std::size_t i = 0; i < probs.size(); ++i) p(static_cast<Eigen::Index>(i)) = probs[i].get<double>();
    return JointDistribution(std::move(regs), std::move(p));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter(std::string("malformed distribution JSON: ") + e.what());
  }
}

Json to_json(const LinearCode& code) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < code.generator().rows(); ++i) rows.push_back(to_hex(BitVector(code.generator().row(i).transpose())));
  return {{"n", code.length()}, {"k", code.dimension()}, {"generator", rows}, {"min_distance", code.min_distance()}};
}

LinearCode code_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    const int k = j.at("k").get<int>();
    const auto& rows = j.at("generator");
    require(n >= 1 && k >= 1 && static_cast<int>(rows.size()) == k, "code JSON needs k generator rows");
    BitMatrix g(k, n);
    for (int i = 0; i < k; ++i) g.row(i) = from_hex(rows[static_cast<std::size_t>(i)].get<std::string>(), n).transpose();
    return LinearCode::from_generator(std::move(g));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter(std::string("malformed code JSON: ") + e.what());
  }
}

Json to_json(const ToeplitzHash& h) {
  return {{"n", h.input_bits()}, {"ell", h.output_bits()}, {"seed", h.seed_hex()}, {"offset", h.offset_hex()}};
}

ToeplitzHash hash_from_json(const Json& j) {
  try {
    return ToeplitzHash::from_hex(j.at("n").get<int>(), j.at("ell").get<int>(), j.at("seed").get<std::string>(),
                                  j.value("offset", std::string{}));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter(std::string("malformed hash JSON: ") + e.what());
  }
}

Json to_json(const RotTranscript& t) {
  Json j;
  j["n"] = t.n;
  j["ell"] = t.ell;
  j["c"] = t.c;
  j["x"] = to_string(t.x);
  j["theta"] = to_string(t.theta);
  j["theta_hat"] = to_string(t.theta_hat);
  j["x_hat"] = to_string(t.x_hat);
  j["I0"] = indices(t.i0);
  j["I1"] = indices(t.i1);
  j["f0"] = hash_or_null(t.f0);
  j["f1"] = hash_or_null(t.f1);
  j["s0"] = to_string(t.s0);
  j["s1"] = to_string(t.s1);
  j["y"] = to_string(t.y);
  j["choice_set_empty"] = t.choice_set_empty;
  if (t.adversarial) j["bob_guess"] = to_string(t.bob_guess);
  return j;
}

Json to_json(const RobustTranscript& t) {
  Json j = to_json(t.rot);
  j["click"] = to_string(t.click);
  j["multi_photon"] = to_string(t.multi);
  j["S_remain"] = indices(t.remain);
  j["syndrome0"] = to_string(t.syn0);
  j["syndrome1"] = to_string(t.syn1);
  j["x_cor"] = to_string(t.x_cor);
  j["abort"] = t.aborted;
  j["decoded"] = t.decoded;
  j["parameters"] = {{"p1_sent", t.p1_sent},       {"ph_noclick", t.ph_noclick}, {"pd_noclick", t.pd_noclick},
                     {"ph_err", t.ph_err},         {"zeta", t.zeta},             {"accept_low", t.accept_low},
                     {"accept_high", t.accept_high}};
  return j;
}

Json to_json(const QidTranscript& t) {
  Json j;
  j["n"] = t.n;
  j["ell"] = t.ell;
  j["w_A"] = t.w_a;
  j["w_B"] = t.w_b;
  j["x"] = to_string(t.x);
  j["theta"] = to_string(t.theta);
  j["theta_hat"] = to_string(t.theta_hat);
  j["x_hat"] = to_string(t.x_hat);
  j["kappa"] = to_string(t.kappa);
  j["I_w"] = indices(t.i_w);
  j["I_w_server"] = indices(t.i_w_server);
  j["f"] = hash_or_null(t.f);
  j["g"] = hash_or_null(t.g);
  j["z"] = to_string(t.z);
  j["expected"] = to_string(t.expected);
  j["accept"] = t.accept;
  return j;
}

void write_csv(std::ostream& out, const std::vector<RateRow>& rows) {
  out << kRateCurveHeader << '\n';
  for (const auto& r : rows) {
    out << format_real(r.r) << ',' << format_real(r.nu) << ',' << format_real(r.n) << ',' << format_real(r.delta)
        << ',' << format_real(r.gamma) << ',' << format_real(r.capacity) << ',' << r.ell << ','
        << format_real(r.ot_rate) << ',' << format_real(r.eps) << ',' << format_real(r.two_eps) << ','
        << (r.feasible ? 1 : 0) << '\n';
  }
}

void write_csv(std::ostream& out, const std::vector<RegionRow>& rows) {
  out << kRegionHeader << '\n';
  for (const auto& r : rows) {
    out << format_real(r.r) << ',' << format_real(r.nu) << ',' << format_real(r.capacity) << ','
        << format_real(r.product) << ',' << (r.feasible ? 1 : 0) << '\n';
  }
}

Json to_json(const std::vector<RateRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back({{"r", r.r},         {"nu", r.nu},       {"n", r.n},     {"delta", r.delta},
                   {"gamma", r.gamma}, {"capacity", r.capacity}, {"ell", r.ell}, {"ot_rate", r.ot_rate},
                   {"eps", r.eps},     {"two_eps", r.two_eps},   {"feasible", r.feasible}});
  }
  return out;
}

Json to_json(const std::vector<RegionRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back({{"r", r.r}, {"nu", r.nu}, {"capacity", r.capacity}, {"product", r.product}, {"feasible", r.feasible}});
  }
  return out;
}

}  // namespace nqs
