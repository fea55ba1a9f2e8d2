#ifndef MIXDISC_IO_HPP
#define MIXDISC_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "mixdisc/matrix.hpp"

namespace mixdisc {

/// Parsed instance document.  Matrices are stored complex; `real` remembers
/// whether every entry arrived without an imaginary part.
struct InstanceDoc {
    int n = 0;
    std::vector<ComplexMatrix> matrices;
    bool real = true;
    std::vector<Complex> points;
    std::optional<double> eps;
    std::optional<double> rho;
    std::optional<double> gamma;
    std::optional<int> m;
    std::optional<std::uint64_t> seed;
};

/// Reads an instance document from a JSON file.  A document whose top
/// level carries an "input" object (a previous output) is unwrapped.
InstanceDoc load_instance(const std::string& path);
InstanceDoc parse_instance(const std::string& text);

SymmetricTuple symmetric_tuple_from(const InstanceDoc& doc);
ComplexTuple complex_tuple_from(const InstanceDoc& doc);

/// Streaming JSON writer.  Every floating-point value is printed with 17
/// significant digits (std::to_chars), which round-trips doubles exactly
/// and keeps repeated runs byte-identical.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& k);
    JsonWriter& value(double v);
    JsonWriter& value(int v);
    JsonWriter& value(std::uint64_t v);
    JsonWriter& value(bool v);
    JsonWriter& value(const std::string& v);
    JsonWriter& value(const char* v) { return value(std::string(v)); }
    JsonWriter& value(const Complex& z);  // [re, im]
    JsonWriter& value_real_matrix(const Eigen::MatrixXd& m);    // flat row-major
    JsonWriter& value_complex_matrix(const Eigen::MatrixXcd& m);

    std::string str() const { return out_; }

private:
    void prefix();
    void raw(const std::string& s);
    std::string out_;
    std::vector<bool> needs_comma_;
    int indent_ = 0;
    bool after_key_ = false;
};

/// 17-significant-digit decimal form of a double.
std::string format_double(double v);

}  // namespace mixdisc

#endif
