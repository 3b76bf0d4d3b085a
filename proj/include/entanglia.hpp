#pragma once

#include "entanglia/error.hpp"
#include "entanglia/numkernel.hpp"
#include "entanglia/majorize.hpp"
#include "entanglia/qstate.hpp"
#include "entanglia/measures.hpp"
#include "entanglia/witness.hpp"
#include "entanglia/locc.hpp"
#include "entanglia/noflip.hpp"
#include "entanglia/boundent.hpp"
#include "entanglia/hideproto.hpp"
#include "entanglia/io.hpp"
