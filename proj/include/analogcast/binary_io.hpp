#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

namespace analogcast::io {

// Little-endian primitives shared by every raw-binary format in the project
// (ACST, KMAT, EIGB, GHMD, LPMD, FCST).

void write_magic(std::ostream& out, std::string_view magic);
void expect_magic(std::istream& in, std::string_view magic, const std::string& what);

void write_u8(std::ostream& out, std::uint8_t v);
void write_u16(std::ostream& out, std::uint16_t v);
void write_u64(std::ostream& out, std::uint64_t v);
void write_i64(std::ostream& out, std::int64_t v);
void write_f64(std::ostream& out, double v);
void write_string(std::ostream& out, const std::string& s);
void write_vector(std::ostream& out, const Eigen::VectorXd& v);
// Row-major payload regardless of Eigen's storage order.
void write_matrix_rows(std::ostream& out, const Eigen::MatrixXd& m);

std::uint8_t read_u8(std::istream& in);
std::uint16_t read_u16(std::istream& in);
std::uint64_t read_u64(std::istream& in);
std::int64_t read_i64(std::istream& in);
double read_f64(std::istream& in);
std::string read_string(std::istream& in);
Eigen::VectorXd read_vector(std::istream& in, std::size_t n);
Eigen::MatrixXd read_matrix_rows(std::istream& in, std::size_t rows, std::size_t cols);

std::ofstream open_for_write(const std::filesystem::path& path);
std::ifstream open_for_read(const std::filesystem::path& path);

} // namespace analogcast::io
