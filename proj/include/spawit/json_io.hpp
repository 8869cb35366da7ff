#pragma once

#include <json.hpp>

#include "spawit/certificate.hpp"
#include "spawit/complex_matrix.hpp"
#include "spawit/optimality.hpp"
#include "spawit/realignment.hpp"
#include "spawit/witness.hpp"

namespace spawit {

using nlohmann::json;

/// {"dim_a", "dim_b", "re": [[...]], "im": [[...]]}; doubles round-trip
/// exactly through the shortest-representation decimal encoder.
inline json matrix_to_json(const ComplexMatrix& m) {
    json re = json::array();
    json im = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json re_row = json::array();
        json im_row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            re_row.push_back(m(r, c).real());
            im_row.push_back(m(r, c).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return json{{"dim_a", m.dim_a()}, {"dim_b", m.dim_b()}, {"re", re}, {"im", im}};
}

inline ComplexMatrix matrix_from_json(const json& j) {
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    const std::size_t rows = re.size();
    if (rows == 0) throw std::invalid_argument("matrix_from_json: empty matrix");
    const std::size_t cols = re.at(0).size();
    ComplexMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = cplx(re.at(r).at(c).get<double>(), im.at(r).at(c).get<double>());
    const std::size_t da = j.value("dim_a", 0);
    const std::size_t db = j.value("dim_b", 0);
    if (da > 0 && db > 0 && m.is_square() && da * db == rows) m.set_bipartite_dims(da, db);
    return m;
}

inline json spa_to_json(const SpaResult& r) {
    return json{{"gamma", r.gamma},
                {"lambda_min", r.lambda_min},
                {"p_star", r.p_star},
                {"ppt_min_eig", r.ppt_min_eig},
                {"spa_state", matrix_to_json(r.spa_state)}};
}

inline json realignment_to_json(const RealignmentReport& r) {
    return json{{"gamma", r.gamma},
                {"singular_values", r.singular_values},
                {"trace_norm_numeric", r.trace_norm_numeric},
                {"trace_norm_analytic", r.trace_norm_analytic},
                {"margin", r.margin},
                {"entangled_flag", r.entangled_flag}};
}

inline json span_certificate_to_json(const SpanCertificate& c) {
    return json{{"vector_count", c.vector_set.size()},
                {"singular_values", c.singular_values},
                {"numeric_rank", c.numeric_rank},
                {"threshold", c.threshold}};
}

namespace exact {

inline nlohmann::json rational_to_json(const Rational& q) {
    return nlohmann::json{{"num", num_string(q)}, {"den", den_string(q)}};
}

inline nlohmann::json polynomial_to_json(const ExactPolynomial& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Rational& c : p.coefficients()) coeffs.push_back(rational_to_json(c));
    return coeffs;
}

inline nlohmann::json certificate_to_json(const CertificateReport& r) {
    nlohmann::json j{{"char_poly", polynomial_to_json(r.char_poly)},
                     {"cubic_factor", polynomial_to_json(r.cubic_factor)},
                     {"lambda_prime", rational_to_json(r.lambda_prime)},
                     {"p_at_lambda_prime", rational_to_json(r.p_at_lambda_prime)},
                     {"lambda0_bracket",
                      {{"lo", rational_to_json(r.lambda0_lo)}, {"hi", rational_to_json(r.lambda0_hi)}}},
                     {"verdict", r.verdict},
                     {"narrative", r.narrative}};
    if (!r.failing_step.empty()) j["failing_step"] = r.failing_step;
    return j;
}

}  // namespace exact

}  // namespace spawit
