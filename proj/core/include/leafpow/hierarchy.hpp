#pragma once

#include <cstddef>

#include "leafpow/certificate.hpp"
#include "leafpow/simple_graph.hpp"

namespace leafpow {

// Same graph with one more threshold in front: half of the smaller of theta_1
// and the smallest leaf distance.
GlpCertificate cert_lift(const GlpCertificate& cert);

// Certificate of the complement: appends 1 + max(theta_q, largest leaf distance).
GlpCertificate cert_complement(const GlpCertificate& cert);

// Complement of two disjoint copies, vertices tagged "#1" and "#2".
SimpleGraph glp_step(const SimpleGraph& graph);

// glp_step applied q - 1 times to the 4-cycle a-b-c-d; 2^(q+1) vertices.
SimpleGraph non_glp_family(std::size_t q);

// Order q certificate of two tagged copies of the certified graph: the two
// trees joined by an edge longer than every threshold.
GlpCertificate disjoint_union_certificate(const GlpCertificate& cert);

// Order q + 1 certificate of glp_step(G) from an order q certificate of G.
GlpCertificate glp_step_certificate(const GlpCertificate& cert);

}  // namespace leafpow
