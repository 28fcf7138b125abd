#pragma once

#include "twoseg/error.hpp"
#include "twoseg/monotone.hpp"
#include "twoseg/report.hpp"
#include "twoseg/parallel.hpp"
#include "twoseg/presheaf.hpp"
#include "twoseg/hom_search.hpp"
#include "twoseg/simplicial_identities.hpp"
#include "twoseg/sset.hpp"
#include "twoseg/sigma.hpp"
#include "twoseg/bijection.hpp"
#include "twoseg/segal.hpp"
#include "twoseg/path.hpp"
#include "twoseg/sdot.hpp"
#include "twoseg/groupoid.hpp"
#include "twoseg/groupoid_sigma.hpp"
#include "twoseg/nerve_exact.hpp"
#include "twoseg/poset.hpp"
#include "twoseg/hall.hpp"
#include "twoseg/search.hpp"
#include "twoseg/io.hpp"
#include "twoseg/render.hpp"
