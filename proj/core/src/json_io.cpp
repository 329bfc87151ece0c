#include "polarkit/json_io.hpp"

#include <cstdio>
#include <istream>
#include <sstream>

namespace polarkit {

Json to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const Matrix4C& m) {
    Json rows = Json::array();
    for (int i = 0; i < 4; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 4; ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const Matrix4R& m) {
    Json rows = Json::array();
    for (int i = 0; i < 4; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 4; ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const SpinorMatrix& m) {
    return Json::array({Json::array({to_json(m.a), to_json(m.d)}),
                        Json::array({to_json(m.c), to_json(m.b)})});
}

Json to_json(const SpinorParams& k) {
    return Json::array({to_json(k.k0), to_json(k.k1), to_json(k.k2), to_json(k.k3)});
}

Json to_json(const QuadParam& q) {
    return Json::array({to_json(q.a0), to_json(q.a.x), to_json(q.a.y), to_json(q.a.z)});
}

Json to_json(const StokesVector& s) { return Json::array({s.s0, s.s1, s.s2, s.s3}); }

Json to_json(const IsotropicStokes& z) {
    return Json::array({to_json(z.z0), to_json(z.z1), to_json(z.z2), to_json(z.z3)});
}

Json to_json(const JonesSpinor& psi) {
    return Json::array({to_json(psi.psi1), to_json(psi.psi2)});
}

Json to_json(const JonesBiSpinor& b) {
    return Json{{"xi", Json::array({to_json(b.xi1), to_json(b.xi2)})},
                {"eta", Json::array({to_json(b.eta1), to_json(b.eta2)})}};
}

Json to_json(const PolarDecomposition& d) {
    return Json{{"rotation", Json::array({d.r0, d.r.x, d.r.y, d.r.z})},
                {"velocity", Json::array({d.velocity.x, d.velocity.y, d.velocity.z})},
                {"order", d.order == PolarDecomposition::Order::rotation_boost
                              ? "rotation-boost"
                              : "boost-rotation"}};
}

namespace {

double number_from_json(const Json& j, const char* what) {
    if (!j.is_number()) throw DomainError(std::string("expected a number in ") + what);
    return j.get<double>();
}

} // namespace

Complex complex_from_json(const Json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2)
        return {number_from_json(j[0], "complex"), number_from_json(j[1], "complex")};
    throw DomainError("expected [re, im] or a plain number for a complex value");
}

Matrix4C matrix4c_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4) throw DomainError("expected a 4x4 matrix");
    Matrix4C m;
    for (int i = 0; i < 4; ++i) {
        if (!j[i].is_array() || j[i].size() != 4)
            throw DomainError("expected a 4x4 matrix");
        for (int k = 0; k < 4; ++k)
            m(i, k) = complex_from_json(j[i][k]);
    }
    if (!m.finite()) throw DomainError("matrix entries must be finite");
    return m;
}

Matrix4R matrix4r_from_json(const Json& j) {
    return real_part_checked(matrix4c_from_json(j), 1e-12);
}

SpinorParams spinor_params_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4)
        throw DomainError("expected a 4-array for spinor parameters");
    return {complex_from_json(j[0]), complex_from_json(j[1]), complex_from_json(j[2]),
            complex_from_json(j[3])};
}

QuadParam quad_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4)
        throw DomainError("expected a 4-array for quad parameters");
    return {complex_from_json(j[0]),
            {complex_from_json(j[1]), complex_from_json(j[2]), complex_from_json(j[3])}};
}

StokesVector stokes_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4)
        throw DomainError("expected a 4-array for a Stokes vector");
    return {number_from_json(j[0], "Stokes"), number_from_json(j[1], "Stokes"),
            number_from_json(j[2], "Stokes"), number_from_json(j[3], "Stokes")};
}

JonesSpinor jones_from_json(const Json& j) {
    if (j.is_object() && j.contains("amplitude_phase")) {
        const Json& a = j["amplitude_phase"];
        if (!a.is_array() || a.size() != 4)
            throw DomainError("amplitude_phase expects [N, M, alpha, beta]");
        return JonesSpinor::from_amplitude_phase(
            number_from_json(a[0], "N"), number_from_json(a[1], "M"),
            number_from_json(a[2], "alpha"), number_from_json(a[3], "beta"));
    }
    if (j.is_array() && j.size() == 2)
        return {complex_from_json(j[0]), complex_from_json(j[1])};
    throw DomainError("expected [[re,im],[re,im]] or {\"amplitude_phase\":...} "
                      "for a Jones spinor");
}

JonesBiSpinor bispinor_from_json(const Json& j) {
    if (j.is_object() && j.contains("amplitude_phase")) {
        const Json& a = j["amplitude_phase"];
        if (!a.is_array() || a.size() != 8)
            throw DomainError("amplitude_phase expects [N1,N2,n1,n2,M1,M2,m1,m2]");
        std::array<double, 8> v{};
        for (size_t i = 0; i < 8; ++i) v[i] = number_from_json(a[i], "amplitude_phase");
        return JonesBiSpinor::from_amplitude_phase(v[0], v[1], v[2], v[3], v[4], v[5],
                                                   v[6], v[7]);
    }
    if (j.is_object() && j.contains("xi") && j.contains("eta")) {
        const JonesSpinor xi = jones_from_json(j["xi"]);
        const JonesSpinor eta = jones_from_json(j["eta"]);
        return {xi.psi1, xi.psi2, eta.psi1, eta.psi2};
    }
    throw DomainError("expected {\"xi\":..., \"eta\":...} or "
                      "{\"amplitude_phase\":...} for a bi-spinor");
}

namespace {

std::vector<std::vector<double>> read_csv_rows(std::istream& in, size_t width) {
    std::vector<std::vector<double>> rows;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw DomainError("CSV line " + std::to_string(lineno) +
                                  ": cannot parse '" + cell + "'");
            }
        }
        if (row.size() != width)
            throw DomainError("CSV line " + std::to_string(lineno) + ": expected " +
                              std::to_string(width) + " values, got " +
                              std::to_string(row.size()));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::vector<StokesVector> read_stokes_csv(std::istream& in) {
    std::vector<StokesVector> out;
    for (const auto& r : read_csv_rows(in, 4)) out.push_back({r[0], r[1], r[2], r[3]});
    return out;
}

std::vector<std::pair<StokesVector, StokesVector>> read_stokes_pairs_csv(
    std::istream& in) {
    std::vector<std::pair<StokesVector, StokesVector>> out;
    for (const auto& r : read_csv_rows(in, 8))
        out.emplace_back(StokesVector{r[0], r[1], r[2], r[3]},
                         StokesVector{r[4], r[5], r[6], r[7]});
    return out;
}

namespace {

void dump_value(const Json& j, std::string& out, int indent, int depth) {
    auto pad = [&](int d) {
        if (indent > 0) out.append(static_cast<size_t>(indent * d), ' ');
    };
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) { out += "{}"; break; }
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                if (indent > 0) out += '\n';
                pad(depth + 1);
                out += Json(it.key()).dump();
                out += indent > 0 ? ": " : ":";
                dump_value(it.value(), out, indent, depth + 1);
            }
            if (indent > 0) out += '\n';
            pad(depth);
            out += '}';
            break;
        }
        case Json::value_t::array: {
            if (j.empty()) { out += "[]"; break; }
            // flat arrays of scalars stay on one line
            bool scalars = true;
            for (const auto& v : j)
                if (v.is_structured()) { scalars = false; break; }
            out += '[';
            for (size_t i = 0; i < j.size(); ++i) {
                if (i) out += indent > 0 && scalars ? ", " : ",";
                if (!scalars && indent > 0) {
                    out += '\n';
                    pad(depth + 1);
                }
                dump_value(j[i], out, indent, depth + 1);
            }
            if (!scalars && indent > 0) {
                out += '\n';
                pad(depth);
            }
            out += ']';
            break;
        }
        case Json::value_t::number_float: {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.17g", j.get<double>());
            out += buf;
            break;
        }
        default:
            out += j.dump();
            break;
    }
}

} // namespace

std::string dump_json(const Json& j, int indent) {
    std::string out;
    dump_value(j, out, indent, 0);
    return out;
}

} // namespace polarkit
