#ifndef IMCF_RULED_H
#define IMCF_RULED_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Causal character of a vector under the ambient product
 * `x1 y1 + x2 y2 - x3 y3`.
 */
typedef enum {
  IR_CAUSAL_CLASS_SPACELIKE = 0,
  IR_CAUSAL_CLASS_TIMELIKE = 1,
  IR_CAUSAL_CLASS_LIGHTLIKE = 2,
} IrCausalClass;

/**
 * Result code of a fallible call. Values other than `Ok` leave every
 * out-parameter untouched.
 */
typedef enum {
  IR_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  IR_STATUS_NULL_POINTER = 1,
  /**
   * A parameter is non-finite or outside its documented range.
   */
  IR_STATUS_INVALID_PARAMETER = 2,
  /**
   * Evaluation outside the family's parameter domain.
   */
  IR_STATUS_DOMAIN_ERROR = 3,
  /**
   * The first fundamental form is degenerate at the point.
   */
  IR_STATUS_DEGENERATE_SURFACE = 4,
  /**
   * |H| below tolerance: the flow speed 1/H is undefined.
   */
  IR_STATUS_MEAN_CURVATURE_ZERO = 5,
  /**
   * An ODE right-hand side hit a pole or diverged.
   */
  IR_STATUS_SINGULAR_RHS = 6,
  /**
   * A structural precondition (normalized ruling, orthogonality) failed.
   */
  IR_STATUS_ASSUMPTION_VIOLATED = 7,
} IrStatus;

/**
 * Opaque handle to one member of a classified family.
 */
typedef struct IrFamily IrFamily;

/**
 * A vector in Lorentz-Minkowski 3-space; `x3` is the timelike coordinate.
 */
typedef struct {
  double x1;
  double x2;
  double x3;
} IrVec3;

/**
 * Position and partial derivatives of a parametrized surface at one point.
 */
typedef struct {
  IrVec3 x;
  IrVec3 x_s;
  IrVec3 x_t;
  IrVec3 x_ss;
  IrVec3 x_st;
  IrVec3 x_tt;
} IrJet;

/**
 * First and second fundamental forms, causal sign, area element, and mean
 * curvature at a point.
 */
typedef struct {
  double E;
  double F;
  double G;
  double e;
  double f;
  double g;
  /**
   * +1 on timelike patches, -1 on spacelike ones.
   */
  int32_t eps;
  double area_el;
  double H;
} IrFundamental;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a member of the non-cylindrical family with velocity
 * `(v1, v2, v3)`, `v2 != v3`, and integration constants `c1, c2, c3`.
 *
 * # Safety
 * `out` must be a valid pointer; the handle written to it must be released
 * with [`ir_family_free`].
 */
IrStatus ir_family_noncyl(double v1,
                          double v2,
                          double v3,
                          double c1,
                          double c2,
                          double c3,
                          IrFamily **out);

/**
 * Builds a spacelike-ruling cylindrical member with `|v2| = |v3|`
 * (`v3 = sigma*v2`); `sigma` and `delta` must be +1 or -1.
 *
 * # Safety
 * `out` must be a valid pointer; release the handle with [`ir_family_free`].
 */
IrStatus ir_family_cyl_equal(double v2,
                             int32_t sigma,
                             int32_t delta,
                             double c1,
                             double c2,
                             IrFamily **out);

/**
 * Builds a spacelike-ruling cylindrical member with `v2^2 != v3^2`;
 * `delta` and `branch` must be +1 or -1.
 *
 * # Safety
 * `out` must be a valid pointer; release the handle with [`ir_family_free`].
 */
IrStatus ir_family_cyl_general(double v2,
                               double v3,
                               int32_t delta,
                               int32_t branch,
                               double c1,
                               double c2,
                               IrFamily **out);

/**
 * Builds a timelike-ruling cylindrical member with `(v1, v2) != (0, 0)`,
 * defined for `|s| < sqrt(v1^2 + v2^2)/2`; `branch` must be +1 or -1.
 *
 * # Safety
 * `out` must be a valid pointer; release the handle with [`ir_family_free`].
 */
IrStatus ir_family_cyl_timelike(double v1,
                                double v2,
                                int32_t branch,
                                double c1,
                                double c2,
                                IrFamily **out);

/**
 * Releases a family handle. Null is accepted and ignored.
 *
 * # Safety
 * `fam` must be null or a handle obtained from an `ir_family_*` constructor
 * that has not been freed yet.
 */
void ir_family_free(IrFamily *fam);

/**
 * Writes the family's translation velocity (free components set to zero).
 *
 * # Safety
 * `fam` and `out` must be valid pointers.
 */
IrStatus ir_family_velocity(const IrFamily *fam, IrVec3 *out);

/**
 * Whether `s` lies inside the family's parameter domain.
 *
 * # Safety
 * `fam` must be a valid handle.
 */
bool ir_family_in_domain(const IrFamily *fam, double s);

/**
 * Evaluates the closed-form surface jet at `(s, t)`.
 *
 * # Safety
 * `fam` and `out` must be valid pointers.
 */
IrStatus ir_family_jet(const IrFamily *fam, double s, double t, IrJet *out);

/**
 * Polynomial-cleared soliton residual of the family at `(s, t)` against its
 * own velocity: `raw` vanishes exactly on translators, `norm` is
 * `raw/(1 + disc^2)`.
 *
 * # Safety
 * `fam`, `raw`, and `norm` must be valid pointers.
 */
IrStatus ir_family_residual(const IrFamily *fam, double s, double t, double *raw, double *norm);

/**
 * Fundamental forms, causal sign, area element, and mean curvature of a jet.
 *
 * # Safety
 * `jet` and `out` must be valid pointers.
 */
IrStatus ir_jet_fundamental(const IrJet *jet, IrFundamental *out);

/**
 * Polynomial-cleared soliton residual of an arbitrary jet against
 * velocity `v`.
 *
 * # Safety
 * `jet`, `raw`, and `norm` must be valid pointers.
 */
IrStatus ir_residual_princ(const IrJet *jet, IrVec3 v, double *raw, double *norm);

/**
 * Causal class of `v`. A negative `tau` selects the default tolerance
 * `1e-10 * max(1, |v|_euclidean^2)`.
 */
IrCausalClass ir_causal_class(IrVec3 v, double tau);

/**
 * The ambient inner product `u1 v1 + u2 v2 - u3 v3`.
 */
double ir_lorentz_inner(IrVec3 u, IrVec3 v);

/**
 * The Lorentzian cross product, satisfying `<u x v, w> = det(w, u, v)`.
 */
IrVec3 ir_lorentz_cross(IrVec3 u, IrVec3 v);

/**
 * The mixed product `<u x v, w> = det(u, v, w)`.
 */
double ir_mixed_product(IrVec3 u, IrVec3 v, IrVec3 w);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* IMCF_RULED_H */
