#include "grouptest/formats.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "grouptest/errors.hpp"

namespace gt {
namespace {

std::uint64_t parse_count(std::istream& in, const char* what) {
    std::uint64_t v;
    if (!(in >> v)) throw FormatError(std::string("expected ") + what);
    return v;
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << body;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::ifstream open_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    return in;
}

void reject_trailing(std::istream& in, const char* what) {
    char c;
    while (in.get(c))
        if (c != ' ' && c != '\n' && c != '\r' && c != '\t')
            throw FormatError(std::string("trailing content after ") + what);
}

} // namespace

std::string to_gtm1(const BitMatrix& A) {
    std::ostringstream out;
    out << "GTM1 " << A.rows() << ' ' << A.cols() << '\n';
    for (std::uint64_t i = 0; i < A.rows(); ++i) {
        auto r = A.row(i);
        out << r.size();
        for (std::uint32_t c : r) out << ' ' << c;
        out << '\n';
    }
    return out.str();
}

BitMatrix from_gtm1(std::istream& in) {
    std::string magic;
    if (!(in >> magic) || magic != "GTM1") throw FormatError("matrix file must start with GTM1");
    std::uint64_t m = parse_count(in, "row count");
    std::uint64_t n = parse_count(in, "column count");
    std::vector<std::vector<std::uint32_t>> rows(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        std::uint64_t k = parse_count(in, "row weight");
        rows[i].reserve(k);
        std::uint64_t prev = 0;
        for (std::uint64_t j = 0; j < k; ++j) {
            std::uint64_t c = parse_count(in, "column index");
            if (c >= n) throw FormatError("column index out of range in GTM1 row");
            if (j > 0 && c <= prev) throw FormatError("GTM1 row indices must be strictly ascending");
            prev = c;
            rows[i].push_back(static_cast<std::uint32_t>(c));
        }
    }
    reject_trailing(in, "GTM1 rows");
    return BitMatrix(m, n, std::move(rows));
}

std::string to_gtv1(const SupportSet& x) {
    std::ostringstream out;
    out << "GTV1 " << x.universe() << '\n';
    bool first = true;
    for (std::uint32_t i : x.indices()) {
        if (!first) out << ' ';
        out << i;
        first = false;
    }
    out << '\n';
    return out.str();
}

SupportSet from_gtv1(std::istream& in) {
    std::string magic;
    if (!(in >> magic) || magic != "GTV1") throw FormatError("support file must start with GTV1");
    std::uint64_t n = parse_count(in, "universe size");
    std::string rest;
    std::getline(in, rest); // consume end of header line
    if (!std::getline(in, rest)) rest.clear();
    std::istringstream line(rest);
    std::vector<std::uint32_t> indices;
    std::uint64_t v;
    std::uint64_t prev = 0;
    bool first = true;
    while (line >> v) {
        if (v >= n) throw FormatError("support index out of range in GTV1");
        if (!first && v <= prev) throw FormatError("GTV1 indices must be strictly ascending");
        prev = v;
        first = false;
        indices.push_back(static_cast<std::uint32_t>(v));
    }
    if (!line.eof() && line.fail()) throw FormatError("GTV1 indices must be integers");
    reject_trailing(in, "GTV1 indices");
    return SupportSet(n, std::move(indices));
}

std::string to_observation(const BitVec& y) {
    return y.str() + "\n";
}

BitVec from_observation(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("observation file is empty");
    if (line.empty()) throw FormatError("observation line is empty");
    for (char c : line)
        if (c != '0' && c != '1') throw FormatError("observation must contain only '0'/'1'");
    reject_trailing(in, "the observation line");
    return BitVec::from_string(line);
}

void write_gtm1(const std::string& path, const BitMatrix& A) { write_file(path, to_gtm1(A)); }

BitMatrix read_gtm1(const std::string& path) {
    auto in = open_file(path);
    return from_gtm1(in);
}

void write_gtv1(const std::string& path, const SupportSet& x) { write_file(path, to_gtv1(x)); }

SupportSet read_gtv1(const std::string& path) {
    auto in = open_file(path);
    return from_gtv1(in);
}

void write_observation(const std::string& path, const BitVec& y) {
    write_file(path, to_observation(y));
}

BitVec read_observation(const std::string& path) {
    auto in = open_file(path);
    return from_observation(in);
}

} // namespace gt
