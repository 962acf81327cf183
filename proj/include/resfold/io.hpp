#pragma once

#include <optional>
#include <string>

#include "resfold/dga.hpp"
#include "resfold/frame.hpp"
#include "resfold/spinor.hpp"

namespace resfold {

inline constexpr const char* kSchema = "resfold/1";

/// Malformed or unreadable interchange data; `path` locates the field.
class IoError : public Error {
 public:
  IoError(std::string path, const std::string& what)
      : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// One interchange file. Every block but the ring is optional; blocks are
/// written in this order.
struct Document {
  RingPtr ring;
  std::optional<FreeComplex> complex;
  std::optional<SelfDualStructure> selfdual;
  std::optional<HyperbolicFrame> frame;
  std::optional<MultiplicationStructure> multiplication;
  std::optional<PolyMatrix> basis_change;
  std::optional<SpinorVector> spinor;
  std::optional<PolyMatrix> w;
  /// Free-form JSON text echoed by the tools (grades, ranks, trials).
  std::string report;
};

std::string write_document(const Document& doc);
Document parse_document(const std::string& text);

std::string matrix_to_json(const PolyMatrix& m);

Document read_document_file(const std::string& path);  // "-" reads stdin
void write_text_file(const std::string& path, const std::string& text);  // "-" writes stdout

}  // namespace resfold
