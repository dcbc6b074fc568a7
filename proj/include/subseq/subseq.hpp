#pragma once

#include "subseq/formula.hpp"
#include "subseq/sequent.hpp"
#include "subseq/text.hpp"
#include "subseq/derivation.hpp"
#include "subseq/kernel.hpp"
#include "subseq/search.hpp"
#include "subseq/transforms.hpp"
#include "subseq/single.hpp"
#include "subseq/embedding.hpp"
#include "subseq/semantics.hpp"
#include "subseq/hilbert.hpp"
#include "subseq/proof_io.hpp"
