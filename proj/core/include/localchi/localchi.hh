/**
 * @file localchi.hh
 * @brief Umbrella include for the whole library.
 */
#ifndef LOCALCHI_LOCALCHI_HH
#define LOCALCHI_LOCALCHI_HH

#include "localchi/bundle.hh"
#include "localchi/cone.hh"
#include "localchi/dual.hh"
#include "localchi/errors.hh"
#include "localchi/field.hh"
#include "localchi/fpmodule.hh"
#include "localchi/groebner.hh"
#include "localchi/invariants.hh"
#include "localchi/linalg.hh"
#include "localchi/monomial.hh"
#include "localchi/poly.hh"
#include "localchi/sections.hh"
#include "localchi/zupoly.hh"

#endif
