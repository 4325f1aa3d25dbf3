#ifndef SEMIGRAPH_ERRORS_HPP
#define SEMIGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace semigraph {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A Cayley table entry is not an element id.
struct EntryOutOfRange : Error {
  int row, col;
  EntryOutOfRange(int r, int c)
      : Error("table entry out of range at (" + std::to_string(r) + "," +
              std::to_string(c) + ")"),
        row(r),
        col(c) {}
};

/// The table fails associativity; carries the first witness triple.
struct NotAssociative : Error {
  int x, y, z;
  NotAssociative(int x_, int y_, int z_)
      : Error("not associative: witness (" + std::to_string(x_) + "," +
              std::to_string(y_) + "," + std::to_string(z_) + ")"),
        x(x_),
        y(y_),
        z(z_) {}
};

struct InvalidParams : Error {
  using Error::Error;
};

struct OutOfRange : Error {
  using Error::Error;
};

struct EmptyGeneratingSet : Error {
  EmptyGeneratingSet() : Error("generating set is empty") {}
};

struct NotASubsemigroup : Error {
  int x, y;  // witness pair whose product escapes
  NotASubsemigroup(int x_, int y_)
      : Error("subset is not closed: " + std::to_string(x_) + "*" +
              std::to_string(y_) + " escapes"),
        x(x_),
        y(y_) {}
};

struct NotAGroup : Error {
  using Error::Error;
};

struct NotIdempotent : Error {
  int element;
  explicit NotIdempotent(int e)
      : Error("element " + std::to_string(e) + " is not idempotent"), element(e) {}
};

/// A sandwich matrix row or column is entirely zero.
struct IrregularMatrix : Error {
  bool is_row;
  int index;
  IrregularMatrix(bool row, int idx)
      : Error(std::string("sandwich matrix ") + (row ? "row " : "column ") +
              std::to_string(idx) + " is all zero"),
        is_row(row),
        index(idx) {}
};

struct SameVertex : Error {
  int vertex;
  explicit SameVertex(int v)
      : Error("adjacency is undefined for a vertex with itself (" +
              std::to_string(v) + ")"),
        vertex(v) {}
};

/// An exact solver was asked to search a component above the size cap.
struct SizeCapExceeded : Error {
  int size, cap;
  SizeCapExceeded(int s, int c)
      : Error("component of size " + std::to_string(s) +
              " exceeds exact-solver cap " + std::to_string(c) +
              " (raise with --cap or MONOGENIC_CAP)"),
        size(s),
        cap(c) {}
};

struct InvalidK : Error {
  int k;
  explicit InvalidK(int k_)
      : Error("argument must be at least 2, got " + std::to_string(k_)), k(k_) {}
};

struct NotReesConstructed : Error {
  NotReesConstructed()
      : Error("operation requires a semigroup built from a sandwich-matrix spec") {}
};

/// Malformed input file or construction expression.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace semigraph

#endif
