#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "matdec/bipartite.hpp"
#include "matdec/core.hpp"
#include "matdec/gaingraph.hpp"
#include "matdec/linear.hpp"

namespace matdec {

// ------------------------------------------------------------- bounds ------
// Class-count ceilings per presentation class as functions of the boundary
// connectivity lambda.  All arithmetic saturates at UINT64_MAX, which encodes
// "finite but beyond 64 bits" (and "no finite bound" for infinite groups).

uint64_t pi_uniform(uint64_t lambda);             // lambda + 2
uint64_t pi_linear(uint64_t q, uint64_t lambda);  // 2^((q^l-1)/(q-1)) + 1
uint64_t pi_ft_reference(uint64_t lambda);        // 2^(2^(2^l)) + 1
uint64_t pi_ft_certified(uint64_t cover_size);    // 2^(2^(4s)) + 1
// Max boundary vertices of a 3-connected frame instance: 14*lambda - 12.
// Defined for lambda >= 1 (proper nonempty separations).
uint64_t frame_boundary_cap(uint64_t lambda);
// Signature ceiling with n = 14*lambda-12 boundary vertices over a group of
// order h: (2(n+1)h)^n + 1.  h = 0 encodes an infinite group: no bound.
uint64_t pi_frame(uint64_t lambda, uint64_t group_order);
// Width-to-class-count transfer: displayed sets of a width-w tree have
// lambda <= w-1, so the class ceiling at w-1 bounds the achievable dw.
uint64_t rho_from_pi(const std::function<uint64_t(uint64_t)>& pi, uint64_t width);

// ------------------------------------------------- uniform refinement ------

// Buckets subsets of U in U_{r,n} by size: above rank = dependent bucket;
// each exact size within lambda of the rank = own bucket; everything smaller
// collapses into one.  At most lambda+2 buckets.
struct UniformRefinement {
    int rank_u = 0;
    int lambda = 0;
    int bucket(subset_t X) const;  // X given as a ground mask, X subset of U
    int max_buckets() const { return lambda + 2; }
};

// Throws if lambda understates the true connectivity of U in U_{r,n}.
UniformRefinement uniform_refinement(int r, int n, subset_t U, int lambda);

// -------------------------------------------------- linear signature -------

struct LinearSignature {
    bool dependent = false;
    FpMatrix basis;  // canonical echelon basis of span(X) meet span(complement)

    bool operator==(const LinearSignature& o) const {
        return dependent == o.dependent && basis == o.basis;
    }
    std::string to_string() const;
};

// X must be a subset of U (ground masks over the column ground set).
LinearSignature linear_signature(const LinearRep& rep, subset_t U, subset_t X);

// --------------------------------- fundamental transversal signatures ------

// Element ids of a minimum vertex cover of the cross-edge graph: edges of G
// with exactly one endpoint inside U.  Size equals the maximum cross
// matching, which never exceeds lambda(U).
std::vector<int> ft_boundary_cover(const BipartitePresentation& G, subset_t U);

// Certificate tuple relative to a side P of the separation and the cover S:
// s1 lives in B&P&S, z in A&Q&S, s3 in A&P&S, s4 in B&Q&S (Q = complement
// of P); all four are ground masks.
struct FTCertificate {
    subset_t s1 = 0, z = 0, s3 = 0, s4 = 0;
    bool u_side = true;

    auto tie() const { return std::tie(s1, z, s3, s4, u_side); }
    bool operator==(const FTCertificate& o) const { return tie() == o.tie(); }
    bool operator<(const FTCertificate& o) const { return tie() < o.tie(); }
};

// Decides whether independent X (a subset of P) admits a matching witnessing
// the tuple c: builds the pruned bipartite graph and demands one matching
// saturating (X|z)&A together with (s1-X)|s4.  Rejects (false) when the
// tuple's containment prechecks fail; throws when X is dependent or c's
// corners leave their cover corners.
bool ft_certificate_test(const BipartitePresentation& G, const std::vector<int>& S, subset_t P,
                         subset_t X, const FTCertificate& c);

struct FTSignatureSet {
    bool dependent = false;
    std::vector<FTCertificate> accepted;  // sorted

    bool operator==(const FTSignatureSet& o) const {
        return dependent == o.dependent && accepted == o.accepted;
    }
    std::string to_string() const;
};

// All accepted tuples over the 2^|S| candidates (the corners partition S).
FTSignatureSet ft_signature(const BipartitePresentation& G, const std::vector<int>& S, subset_t P,
                            bool u_side, subset_t X);

// Joint-extension test for tuples computed on opposite sides: c=(S1,Z,S3,S4)
// and d=(T1,Z',T3,T4) fit together iff Z = T3, Z' = S3, S1 and T4 are
// disjoint, and S4 and T1 are disjoint.  Same-side input throws.
bool ft_compatible(const FTCertificate& c, const FTCertificate& d);

// True iff some pair from the two signature sets is compatible; with both
// sets computed for independent X and Y this decides independence of X|Y.
bool ft_compatible_pair_exists(const FTSignatureSet& sx, const FTSignatureSet& sy);

// ----------------------------------------------------- frame signature -----

// Vertices incident with edges inside U and edges outside U (masks over the
// sorted edge-id ground set).
std::vector<int> frame_boundary(const Multigraph& g, subset_t U);

struct FrameBlock {
    std::vector<int> vertices;           // boundary vertices of one component
    bool balanced = false;
    std::map<int, long long> anchored;   // gains from the least block vertex; balanced only

    auto tie() const { return std::tie(vertices, balanced, anchored); }
    bool operator==(const FrameBlock& o) const { return tie() == o.tie(); }
    bool operator<(const FrameBlock& o) const { return tie() < o.tie(); }
};

struct FrameSignature {
    bool dependent = false;
    std::vector<FrameBlock> blocks;  // sorted

    bool operator==(const FrameSignature& o) const {
        return dependent == o.dependent && blocks == o.blocks;
    }
    std::string to_string() const;
};

FrameSignature frame_signature(const GainGraph& G, subset_t U, subset_t X);
FrameSignature frame_signature(const BicircularPresentation& B, subset_t U, subset_t X);

// ------------------------------------------------------- class counting ----

// Number of distinct keys among the subsets of U.
int class_count_keys(subset_t U, const std::function<std::string(subset_t)>& key);

}  // namespace matdec
