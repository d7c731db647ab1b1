#include "sholes/sparse.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

#include "sholes/error.hpp"
#include "sholes/kernels.hpp"

namespace sholes {
namespace {

std::atomic<int> g_num_threads{1};

void check_same_shape(const SparseMatrix& a, const SparseMatrix& b,
                      const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(op) + ": shapes " + std::to_string(a.rows()) +
                    "x" + std::to_string(a.cols()) + " and " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

struct CsrBuffers {
  std::vector<Index> row_ptr;
  std::vector<Index> col_idx;
  std::vector<double> values;
};

SparseMatrix finish(Index rows, Index cols, CsrBuffers&& buf) {
  return SparseMatrix::from_parts(rows, cols, std::move(buf.row_ptr),
                                  std::move(buf.col_idx),
                                  std::move(buf.values));
}

// Gustavson row kernel: accumulate a's row i against b into a dense scratch
// row, then compact the touched columns in ascending order. `seen` and `acc`
// must be zeroed on entry and are restored to zero on exit.
void spmm_row(const SparseMatrix& a, const SparseMatrix& b, Index i,
              const kernels::Ops& ops, std::vector<char>& seen,
              std::vector<double>& acc, std::vector<Index>& support,
              std::vector<double>& scratch, CsrBuffers& out) {
  support.clear();
  const auto a_cols = a.row_cols(i);
  const auto a_vals = a.row_vals(i);
  for (std::size_t t = 0; t < a_cols.size(); ++t) {
    const Index k = a_cols[t];
    const auto b_cols = b.row_cols(k);
    for (const Index j : b_cols) {
      if (!seen[j]) {
        seen[j] = 1;
        support.push_back(j);
      }
    }
    ops.scatter_axpy(acc.data(), b_cols.data(), b.row_vals(k).data(),
                     b_cols.size(), a_vals[t]);
  }
  std::sort(support.begin(), support.end());
  scratch.resize(support.size());
  ops.gather(scratch.data(), acc.data(), support.data(), support.size());
  for (std::size_t t = 0; t < support.size(); ++t) {
    const Index j = support[t];
    seen[j] = 0;
    acc[j] = 0.0;
    if (scratch[t] != 0.0) {
      out.col_idx.push_back(j);
      out.values.push_back(scratch[t]);
    }
  }
  out.row_ptr.push_back(static_cast<Index>(out.col_idx.size()));
}

}  // namespace

SparseMatrix::SparseMatrix(Index rows, Index cols)
    : rows_(rows), cols_(cols), row_ptr_(static_cast<std::size_t>(rows) + 1, 0) {
  if (rows < 0 || cols < 0) {
    throw Error(ErrorCode::InvalidArgument, "negative matrix dimension");
  }
}

SparseMatrix SparseMatrix::from_triplets(Index rows, Index cols,
                                         std::vector<Triplet> entries) {
  for (const Triplet& t : entries) {
    if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols) {
      throw Error(ErrorCode::InvalidArgument,
                  "triplet index out of range: (" + std::to_string(t.row) +
                      ", " + std::to_string(t.col) + ")");
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const Triplet& x, const Triplet& y) {
              return x.row != y.row ? x.row < y.row : x.col < y.col;
            });
  for (std::size_t t = 1; t < entries.size(); ++t) {
    if (entries[t].row == entries[t - 1].row &&
        entries[t].col == entries[t - 1].col) {
      throw Error(ErrorCode::DuplicateEdge,
                  "duplicate entry at (" + std::to_string(entries[t].row) +
                      ", " + std::to_string(entries[t].col) + ")");
    }
  }
  SparseMatrix m(rows, cols);
  m.col_idx_.reserve(entries.size());
  m.values_.reserve(entries.size());
  std::size_t t = 0;
  for (Index i = 0; i < rows; ++i) {
    while (t < entries.size() && entries[t].row == i) {
      if (entries[t].value != 0.0) {
        m.col_idx_.push_back(entries[t].col);
        m.values_.push_back(entries[t].value);
      }
      ++t;
    }
    m.row_ptr_[static_cast<std::size_t>(i) + 1] =
        static_cast<Index>(m.col_idx_.size());
  }
  return m;
}

SparseMatrix SparseMatrix::from_parts(Index rows, Index cols,
                                      std::vector<Index> row_ptr,
                                      std::vector<Index> col_idx,
                                      std::vector<double> values) {
  if (row_ptr.size() != static_cast<std::size_t>(rows) + 1 ||
      col_idx.size() != values.size() || row_ptr.front() != 0 ||
      row_ptr.back() != static_cast<Index>(col_idx.size())) {
    throw Error(ErrorCode::Internal, "malformed CSR arrays");
  }
  SparseMatrix m(rows, cols);
  m.row_ptr_ = std::move(row_ptr);
  m.col_idx_ = std::move(col_idx);
  m.values_ = std::move(values);
  return m;
}

double SparseMatrix::at(Index i, Index j) const {
  const auto cols = row_cols(i);
  const auto it = std::lower_bound(cols.begin(), cols.end(), j);
  if (it == cols.end() || *it != j) return 0.0;
  return values_[static_cast<std::size_t>(row_ptr_[i]) +
                 static_cast<std::size_t>(it - cols.begin())];
}

void set_num_threads(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "threads must be >= 1");
  g_num_threads.store(n, std::memory_order_relaxed);
}

int num_threads() { return g_num_threads.load(std::memory_order_relaxed); }

SparseMatrix spmm(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                "spmm: " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " times " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  const kernels::Ops& ops = kernels::active();
  const Index rows = a.rows();
  const int threads = std::min<int>(num_threads(), std::max<Index>(rows, 1));

  if (threads <= 1 || rows < 64) {
    CsrBuffers out;
    out.row_ptr.reserve(static_cast<std::size_t>(rows) + 1);
    out.row_ptr.push_back(0);
    std::vector<char> seen(static_cast<std::size_t>(b.cols()), 0);
    std::vector<double> acc(static_cast<std::size_t>(b.cols()), 0.0);
    std::vector<Index> support;
    std::vector<double> scratch;
    for (Index i = 0; i < rows; ++i) {
      spmm_row(a, b, i, ops, seen, acc, support, scratch, out);
    }
    return finish(rows, b.cols(), std::move(out));
  }

  // Contiguous row ranges per worker; results are stitched in row order, so
  // the output is independent of the thread count.
  std::vector<CsrBuffers> parts(static_cast<std::size_t>(threads));
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(threads));
  const Index chunk = (rows + threads - 1) / threads;
  for (int w = 0; w < threads; ++w) {
    const Index lo = std::min<Index>(rows, w * chunk);
    const Index hi = std::min<Index>(rows, lo + chunk);
    workers.emplace_back([&, w, lo, hi] {
      CsrBuffers& out = parts[static_cast<std::size_t>(w)];
      out.row_ptr.push_back(0);
      std::vector<char> seen(static_cast<std::size_t>(b.cols()), 0);
      std::vector<double> acc(static_cast<std::size_t>(b.cols()), 0.0);
      std::vector<Index> support;
      std::vector<double> scratch;
      for (Index i = lo; i < hi; ++i) {
        spmm_row(a, b, i, ops, seen, acc, support, scratch, out);
      }
    });
  }
  for (std::thread& t : workers) t.join();

  CsrBuffers out;
  out.row_ptr.reserve(static_cast<std::size_t>(rows) + 1);
  out.row_ptr.push_back(0);
  for (const CsrBuffers& part : parts) {
    const Index base = static_cast<Index>(out.col_idx.size());
    for (std::size_t r = 1; r < part.row_ptr.size(); ++r) {
      out.row_ptr.push_back(base + part.row_ptr[r]);
    }
    out.col_idx.insert(out.col_idx.end(), part.col_idx.begin(),
                       part.col_idx.end());
    out.values.insert(out.values.end(), part.values.begin(),
                      part.values.end());
  }
  return finish(rows, b.cols(), std::move(out));
}

SparseMatrix hadamard(const SparseMatrix& a, const SparseMatrix& b) {
  check_same_shape(a, b, "hadamard");
  const kernels::Ops& ops = kernels::active();

  // Identical supports (e.g. squaring a matrix element-wise) reduce to one
  // multiply over the value arrays.
  if (a.row_ptr() == b.row_ptr() && a.col_idx() == b.col_idx()) {
    std::vector<double> prod(a.values().size());
    ops.multiply(prod.data(), a.values().data(), b.values().data(),
                 prod.size());
    CsrBuffers out;
    out.row_ptr.reserve(a.row_ptr().size());
    out.row_ptr.push_back(0);
    for (Index i = 0; i < a.rows(); ++i) {
      for (Index t = a.row_ptr()[i]; t < a.row_ptr()[i + 1]; ++t) {
        if (prod[static_cast<std::size_t>(t)] != 0.0) {
          out.col_idx.push_back(a.col_idx()[static_cast<std::size_t>(t)]);
          out.values.push_back(prod[static_cast<std::size_t>(t)]);
        }
      }
      out.row_ptr.push_back(static_cast<Index>(out.col_idx.size()));
    }
    return finish(a.rows(), a.cols(), std::move(out));
  }

  CsrBuffers out;
  out.row_ptr.reserve(static_cast<std::size_t>(a.rows()) + 1);
  out.row_ptr.push_back(0);
  for (Index i = 0; i < a.rows(); ++i) {
    const auto ac = a.row_cols(i);
    const auto av = a.row_vals(i);
    const auto bc = b.row_cols(i);
    const auto bv = b.row_vals(i);
    std::size_t s = 0, t = 0;
    while (s < ac.size() && t < bc.size()) {
      if (ac[s] < bc[t]) {
        ++s;
      } else if (ac[s] > bc[t]) {
        ++t;
      } else {
        const double v = av[s] * bv[t];
        if (v != 0.0) {
          out.col_idx.push_back(ac[s]);
          out.values.push_back(v);
        }
        ++s;
        ++t;
      }
    }
    out.row_ptr.push_back(static_cast<Index>(out.col_idx.size()));
  }
  return finish(a.rows(), a.cols(), std::move(out));
}

std::vector<double> row_sums(const SparseMatrix& a) {
  const kernels::Ops& ops = kernels::active();
  std::vector<double> sums(static_cast<std::size_t>(a.rows()));
  for (Index i = 0; i < a.rows(); ++i) {
    const auto vals = a.row_vals(i);
    sums[static_cast<std::size_t>(i)] = ops.reduce_add(vals.data(), vals.size());
  }
  return sums;
}

SparseMatrix diag_scale(std::span<const double> y, const SparseMatrix& a) {
  if (static_cast<Index>(y.size()) != a.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                "diag_scale: vector length " + std::to_string(y.size()) +
                    " vs " + std::to_string(a.rows()) + " rows");
  }
  const kernels::Ops& ops = kernels::active();
  CsrBuffers out;
  out.row_ptr.reserve(static_cast<std::size_t>(a.rows()) + 1);
  out.row_ptr.push_back(0);
  std::vector<double> scratch;
  for (Index i = 0; i < a.rows(); ++i) {
    const double c = y[static_cast<std::size_t>(i)];
    const auto cols = a.row_cols(i);
    const auto vals = a.row_vals(i);
    if (c != 0.0) {
      scratch.resize(vals.size());
      ops.scale(scratch.data(), vals.data(), c, vals.size());
      for (std::size_t t = 0; t < cols.size(); ++t) {
        if (scratch[t] != 0.0) {
          out.col_idx.push_back(cols[t]);
          out.values.push_back(scratch[t]);
        }
      }
    }
    out.row_ptr.push_back(static_cast<Index>(out.col_idx.size()));
  }
  return finish(a.rows(), a.cols(), std::move(out));
}

SparseMatrix transpose(const SparseMatrix& a) {
  std::vector<Index> counts(static_cast<std::size_t>(a.cols()) + 1, 0);
  for (const Index j : a.col_idx()) ++counts[static_cast<std::size_t>(j) + 1];
  for (std::size_t j = 1; j < counts.size(); ++j) counts[j] += counts[j - 1];
  std::vector<Index> row_ptr = counts;
  std::vector<Index> col_idx(a.col_idx().size());
  std::vector<double> values(a.values().size());
  for (Index i = 0; i < a.rows(); ++i) {
    const auto cols = a.row_cols(i);
    const auto vals = a.row_vals(i);
    for (std::size_t t = 0; t < cols.size(); ++t) {
      const Index pos = counts[static_cast<std::size_t>(cols[t])]++;
      col_idx[static_cast<std::size_t>(pos)] = i;
      values[static_cast<std::size_t>(pos)] = vals[t];
    }
  }
  return SparseMatrix::from_parts(a.cols(), a.rows(), std::move(row_ptr),
                                  std::move(col_idx), std::move(values));
}

SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b) {
  check_same_shape(a, b, "add");
  CsrBuffers out;
  out.row_ptr.reserve(static_cast<std::size_t>(a.rows()) + 1);
  out.row_ptr.push_back(0);
  for (Index i = 0; i < a.rows(); ++i) {
    const auto ac = a.row_cols(i);
    const auto av = a.row_vals(i);
    const auto bc = b.row_cols(i);
    const auto bv = b.row_vals(i);
    std::size_t s = 0, t = 0;
    while (s < ac.size() || t < bc.size()) {
      Index j;
      double v;
      if (t == bc.size() || (s < ac.size() && ac[s] < bc[t])) {
        j = ac[s];
        v = av[s];
        ++s;
      } else if (s == ac.size() || bc[t] < ac[s]) {
        j = bc[t];
        v = bv[t];
        ++t;
      } else {
        j = ac[s];
        v = av[s] + bv[t];
        ++s;
        ++t;
      }
      if (v != 0.0) {
        out.col_idx.push_back(j);
        out.values.push_back(v);
      }
    }
    out.row_ptr.push_back(static_cast<Index>(out.col_idx.size()));
  }
  return finish(a.rows(), a.cols(), std::move(out));
}

SparseMatrix drop_diagonal(const SparseMatrix& a) {
  CsrBuffers out;
  out.row_ptr.reserve(static_cast<std::size_t>(a.rows()) + 1);
  out.row_ptr.push_back(0);
  for (Index i = 0; i < a.rows(); ++i) {
    const auto cols = a.row_cols(i);
    const auto vals = a.row_vals(i);
    for (std::size_t t = 0; t < cols.size(); ++t) {
      if (cols[t] != i) {
        out.col_idx.push_back(cols[t]);
        out.values.push_back(vals[t]);
      }
    }
    out.row_ptr.push_back(static_cast<Index>(out.col_idx.size()));
  }
  return finish(a.rows(), a.cols(), std::move(out));
}

}  // namespace sholes
