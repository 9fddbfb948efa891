#pragma once

#include "jordan/algebra.hpp"
#include "jordan/catalog.hpp"
#include "jordan/cohomology.hpp"
#include "jordan/document.hpp"
#include "jordan/errors.hpp"
#include "jordan/extension.hpp"
#include "jordan/field.hpp"
#include "jordan/io.hpp"
#include "jordan/isomorphism.hpp"
#include "jordan/lemma.hpp"
#include "jordan/maps.hpp"
#include "jordan/matrix.hpp"
#include "jordan/orbits.hpp"
#include "jordan/polynomial.hpp"
#include "jordan/report.hpp"
#include "jordan/scalar.hpp"
#include "jordan/separation.hpp"
#include "jordan/subspace.hpp"
#include "jordan/tables.hpp"
