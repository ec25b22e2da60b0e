#include "ftstab/trace.hpp"

#include <ostream>

#include "ftstab/csv.hpp"

namespace ftstab {

void write_trace_csv(const Trace& trace, std::ostream& out) {
  const bool split = !trace.l2_v.empty();
  out << "t,l2_u,linf_u,U,V,W,d1";
  if (split) out << ",l2_v,l2_w";
  out << '\n';
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    out << fmt_full(trace.times[i]) << ',' << fmt_full(trace.l2_u[i]) << ','
        << fmt_full(trace.linf_u[i]) << ',' << fmt_full(trace.U[i]) << ','
        << fmt_full(trace.V[i]) << ',' << fmt_full(trace.W[i]) << ','
        << fmt_full(trace.d1[i]);
    if (split) {
      out << ',' << fmt_full(trace.l2_v[i]) << ',' << fmt_full(trace.l2_w[i]);
    }
    out << '\n';
  }
}

void write_snapshot_csv(const Grid& grid, const Field& field,
                        std::ostream& out) {
  out << "x,u\n";
  for (int i = 0; i < grid.size(); ++i) {
    out << fmt_full(grid.nodes()[i]) << ',' << fmt_full(field.values[i])
        << '\n';
  }
}

}  // namespace ftstab
