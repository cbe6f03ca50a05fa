#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "exspec/graph.hpp"
#include "exspec/linalg.hpp"

namespace exspec {

enum class FamilyKind { I, II, III, IV, V, VI, VII, VIII, IX, Friendship };

std::string_view kind_name(FamilyKind k);

/// One catalog entry. Only the parameters used by the kind are meaningful:
/// I (a,k), II (k,l), III (m), IV (k), V/VI (a,b), VII (a,m), VIII/IX (a,k),
/// Friendship (t,r,k).
struct FamilyDescriptor {
  FamilyKind kind = FamilyKind::I;
  int a = 0, b = 0, k = 0, l = 0, m = 0, t = 0, r = 0;

  friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
  friend auto operator<=>(const FamilyDescriptor&, const FamilyDescriptor&) = default;

  static FamilyDescriptor type_I(int a, int k) { return {.kind = FamilyKind::I, .a = a, .k = k}; }
  static FamilyDescriptor type_II(int k, int l) { return {.kind = FamilyKind::II, .k = k, .l = l}; }
  static FamilyDescriptor type_III(int m) { return {.kind = FamilyKind::III, .m = m}; }
  static FamilyDescriptor type_IV(int k) { return {.kind = FamilyKind::IV, .k = k}; }
  static FamilyDescriptor type_V(int a, int b) { return {.kind = FamilyKind::V, .a = a, .b = b}; }
  static FamilyDescriptor type_VI(int a, int b) { return {.kind = FamilyKind::VI, .a = a, .b = b}; }
  static FamilyDescriptor type_VII(int a, int m) { return {.kind = FamilyKind::VII, .a = a, .m = m}; }
  static FamilyDescriptor type_VIII(int a, int k) { return {.kind = FamilyKind::VIII, .a = a, .k = k}; }
  static FamilyDescriptor type_IX(int a, int k) { return {.kind = FamilyKind::IX, .a = a, .k = k}; }
  static FamilyDescriptor friendship(int t, int r, int k) { return {.kind = FamilyKind::Friendship, .k = k, .t = t, .r = r}; }
};

class DescriptorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text form such as "I(a=5,k=7)", "II(k=6,l=2)", "F(t=4,r=1,k=2)". Parameters
/// may also be given positionally in that order ("VIII(4,10)").
FamilyDescriptor parse_descriptor(std::string_view text);
std::string to_string(const FamilyDescriptor& d);

/// Throws DescriptorError when parameters are outside the kind's range.
void validate(const FamilyDescriptor& d);
std::size_t order(const FamilyDescriptor& d);

/// Friendship graphs with t - r = 3 are the same graphs as kind I (a = r).
/// Returns the kind-I descriptor for those and d itself otherwise.
FamilyDescriptor normalize(const FamilyDescriptor& d);
/// Kinds I-IX, plus friendship graphs with t - r = 3.
bool in_catalog(const FamilyDescriptor& d);

// Blocks -------------------------------------------------------------------

/// Rectangular 0/1 block used to assemble the catalog adjacency matrices.
struct Block {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint8_t> bits;

  Block() = default;
  Block(std::size_t r, std::size_t c) : rows(r), cols(c), bits(r * c, 0) {}
  std::uint8_t operator()(std::size_t i, std::size_t j) const { return bits[i * cols + j]; }
  std::uint8_t& operator()(std::size_t i, std::size_t j) { return bits[i * cols + j]; }
  Block transpose() const;
  /// J - B
  Block complement() const;
  IntMatrix to_matrix() const;  // square blocks only
  friend bool operator==(const Block&, const Block&) = default;
};

enum class BlockKind { J, I, Zero, T, R, S };

Block block_J(std::size_t rows, std::size_t cols);
Block block_zero(std::size_t rows, std::size_t cols);
/// Square blocks of the given size (J, I, 0, T_size, R_size) or, for S, the
/// size x size/2 matrix S_size. T needs size divisible by 3, R and S by 2.
Block build_block(BlockKind kind, std::size_t size);

/// Symmetric block matrix with zero diagonal as a graph; throws
/// std::logic_error if the blocks are inconsistent or asymmetric.
Graph assemble_blocks(const std::vector<std::vector<Block>>& blocks);

/// Vertex order follows the displayed block order of each kind.
Graph build_family(const FamilyDescriptor& d);
/// Sizes of the displayed diagonal blocks, in vertex order. Friendship graphs
/// report the common clique followed by each private block.
std::vector<std::size_t> block_sizes(const FamilyDescriptor& d);

// Spectra ------------------------------------------------------------------

/// Residual quadratic x^2 - T x + D together with the multiplicities of 2 and -1.
struct ClaimedSpectrum {
  std::size_t p = 0, q = 0;
  std::int64_t trace = 0, det = 0;
  IntPolynomial residual() const;
  friend bool operator==(const ClaimedSpectrum&, const ClaimedSpectrum&) = default;
};

/// Throws DescriptorError for friendship graphs outside the catalog.
ClaimedSpectrum claimed_spectrum(const FamilyDescriptor& d);

struct CertificationReport {
  FamilyDescriptor descriptor;
  std::size_t order = 0;
  ClaimedSpectrum claimed;
  ExactSpectrum observed;
  IntPolynomial char_poly;
  bool spectrum_matches = false;
  bool connected = false;
  bool sign_pattern = false;  // r > 2 and s < -1
  bool passed() const { return spectrum_matches && connected && sign_pattern; }
  std::string message;
};

CertificationReport certify_family(const FamilyDescriptor& d);

/// Every sporadic descriptor (kinds V-IX), in kind then parameter order.
std::vector<FamilyDescriptor> sporadic_descriptors();

/// Catalog members with order at most `max_order`, ordered by kind then parameters.
std::vector<FamilyDescriptor> catalog_descriptors(std::size_t max_order);

struct SweepBounds {
  int max_a = 20, max_k_I = 20;
  int max_k_II = 10;
  int max_m_III = 30;
  int max_k_IV = 20;
};

/// I: 1<=a<=A, 2<=k<=K; II: 2<=l<=k<=K; III: 3<=m<=M; IV: 2<=k<=K; all sporadics.
std::vector<FamilyDescriptor> sweep_descriptors(const SweepBounds& b = {});

}  // namespace exspec
