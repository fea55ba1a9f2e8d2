#include "mixdisc/io.hpp"

#include <charconv>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace mixdisc {

namespace {

using nlohmann::json;

Complex parse_entry(const json& j) {
    if (j.is_number()) return Complex{j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return Complex{j[0].get<double>(), j[1].get<double>()};
    throw IoError("matrix entries must be numbers or [re, im] pairs");
}

bool looks_like_entry(const json& e) {
    return e.is_number() ||
           (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number());
}

ComplexMatrix parse_matrix(const json& j, int n, bool& all_real) {
    Eigen::MatrixXcd m(n, n);
    auto put = [&](int i, int k, const json& e) {
        Complex z = parse_entry(e);
        if (z.imag() != 0.0) all_real = false;
        m(i, k) = z;
    };
    if (!j.is_array()) throw IoError("each matrix must be an array");
    bool flat = static_cast<int>(j.size()) == n * n;
    if (flat)
        for (const json& e : j)
            if (!looks_like_entry(e)) {
                flat = false;
                break;
            }
    if (flat) {
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) put(i, k, j[static_cast<std::size_t>(i * n + k)]);
    } else if (static_cast<int>(j.size()) == n) {
        for (int i = 0; i < n; ++i) {
            const json& row = j[static_cast<std::size_t>(i)];
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw IoError("matrix row length mismatch");
            for (int k = 0; k < n; ++k) put(i, k, row[static_cast<std::size_t>(k)]);
        }
    } else {
        throw IoError("matrix must hold n*n flat row-major entries or n rows of n entries");
    }
    return ComplexMatrix(std::move(m));
}

}  // namespace

InstanceDoc parse_instance(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw IoError(std::string("JSON parse failure: ") + e.what());
    }
    if (j.contains("input") && j["input"].is_object()) j = j["input"];

    InstanceDoc doc;
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw IoError("instance document needs an integer field n");
    doc.n = j["n"].get<int>();
    if (doc.n < 1) throw IoError("n must be >= 1");

    if (j.contains("matrices")) {
        if (!j["matrices"].is_array()) throw IoError("matrices must be an array");
        for (const json& m : j["matrices"])
            doc.matrices.push_back(parse_matrix(m, doc.n, doc.real));
    }
    if (j.contains("points")) {
        if (!j["points"].is_array()) throw IoError("points must be an array");
        for (const json& p : j["points"]) doc.points.push_back(parse_entry(p));
    }
    auto opt_double = [&](const char* k) -> std::optional<double> {
        if (!j.contains(k)) return std::nullopt;
        if (!j[k].is_number()) throw IoError(std::string(k) + " must be a number");
        return j[k].get<double>();
    };
    doc.eps = opt_double("eps");
    doc.rho = opt_double("rho");
    doc.gamma = opt_double("gamma");
    if (j.contains("m")) doc.m = j["m"].get<int>();
    if (j.contains("seed")) doc.seed = j["seed"].get<std::uint64_t>();
    return doc;
}

InstanceDoc load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_instance(ss.str());
}

SymmetricTuple symmetric_tuple_from(const InstanceDoc& doc) {
    if (doc.matrices.empty()) throw IoError("instance document carries no matrices");
    std::vector<SymmetricMatrix> ms;
    ms.reserve(doc.matrices.size());
    for (const auto& cm : doc.matrices) {
        if (cm.mat().imag().cwiseAbs().maxCoeff() != 0.0)
            throw IoError("expected real symmetric matrices");
        try {
            ms.emplace_back(Eigen::MatrixXd(cm.mat().real()));
        } catch (const InputError& e) {
            throw IoError(e.what());
        }
    }
    return SymmetricTuple(std::move(ms));
}

ComplexTuple complex_tuple_from(const InstanceDoc& doc) {
    if (doc.matrices.empty()) throw IoError("instance document carries no matrices");
    return ComplexTuple(doc.matrices);
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void JsonWriter::prefix() {
    if (after_key_) {
        after_key_ = false;
        return;
    }
    if (!needs_comma_.empty()) {
        if (needs_comma_.back()) out_ += ",";
        needs_comma_.back() = true;
        out_ += "\n";
        out_.append(static_cast<std::size_t>(indent_) * 2, ' ');
    }
}

void JsonWriter::raw(const std::string& s) {
    prefix();
    out_ += s;
}

JsonWriter& JsonWriter::begin_object() {
    raw("{");
    needs_comma_.push_back(false);
    ++indent_;
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    bool had = needs_comma_.back();
    needs_comma_.pop_back();
    --indent_;
    if (had) {
        out_ += "\n";
        out_.append(static_cast<std::size_t>(indent_) * 2, ' ');
    }
    out_ += "}";
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    raw("[");
    needs_comma_.push_back(false);
    ++indent_;
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    bool had = needs_comma_.back();
    needs_comma_.pop_back();
    --indent_;
    if (had) {
        out_ += "\n";
        out_.append(static_cast<std::size_t>(indent_) * 2, ' ');
    }
    out_ += "]";
    return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
    prefix();
    out_ += "\"" + k + "\": ";
    after_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    raw(format_double(v));
    return *this;
}

JsonWriter& JsonWriter::value(int v) {
    raw(std::to_string(v));
    return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t v) {
    raw(std::to_string(v));
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    raw(v ? "true" : "false");
    return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
    std::string esc;
    for (char c : v) {
        switch (c) {
            case '"': esc += "\\\""; break;
            case '\\': esc += "\\\\"; break;
            case '\n': esc += "\\n"; break;
            case '\t': esc += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char b[8];
                    std::snprintf(b, sizeof(b), "\\u%04x", c);
                    esc += b;
                } else {
                    esc += c;
                }
        }
    }
    raw("\"" + esc + "\"");
    return *this;
}

JsonWriter& JsonWriter::value(const Complex& z) {
    prefix();
    out_ += "[" + format_double(z.real()) + ", " + format_double(z.imag()) + "]";
    return *this;
}

JsonWriter& JsonWriter::value_real_matrix(const Eigen::MatrixXd& m) {
    prefix();
    out_ += "[";
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (i != 0 || j != 0) out_ += ", ";
            out_ += format_double(m(i, j));
        }
    out_ += "]";
    return *this;
}

JsonWriter& JsonWriter::value_complex_matrix(const Eigen::MatrixXcd& m) {
    prefix();
    out_ += "[";
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (i != 0 || j != 0) out_ += ", ";
            out_ += "[" + format_double(m(i, j).real()) + ", " + format_double(m(i, j).imag()) +
                    "]";
        }
    out_ += "]";
    return *this;
}

}  // namespace mixdisc
