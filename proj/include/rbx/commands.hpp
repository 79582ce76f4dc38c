#pragma once

#include "rbx/io.hpp"

#include <functional>
#include <optional>
#include <string>

namespace rbx {

enum ExitCode : int {
    kExitOk = 0,
    kExitNegative = 1,
    kExitUndecided = 2,
    kExitInputError = 3,
    kExitBudget = 4,
    kExitInternal = 5,
};

struct CommandResult {
    int exit_code = kExitOk;
    Json payload;
};

/// The flag if given, else RBX_BUDGET, else kDefaultBudget. Throws ParseError
/// for a malformed RBX_BUDGET.
std::uint64_t resolve_budget(std::optional<std::uint64_t> flag);

/// Runs body, mapping ParseError and invalid input to 3, BudgetExceeded to 4
/// and anything else to 5, each with {"error": ...}.
CommandResult guarded(const std::function<CommandResult()>& body);

// Each command validates its inputs completely and reports an invalid one as
// an input error; only validate reports invalid structure as a verdict.
CommandResult cmd_validate(const Input& in);
CommandResult cmd_cohomology(const Input& rep, std::size_t degree);
CommandResult cmd_derivations(const Input& rep);
CommandResult cmd_extend(const Input& cocycle);
CommandResult cmd_extract(const Input& extension, const std::optional<Input>& section);
/// a and b are both cocycle files or both extension files.
CommandResult cmd_equivalent(const Input& a, const Input& b);
CommandResult cmd_inducible(const Input& extension, const Input& pair, const std::optional<Input>& witness);
enum class WellsKind { Pair, Alpha, Beta };
CommandResult cmd_wells(const Input& extension, const Input& arg, WellsKind kind);
CommandResult cmd_exactness(const Input& extension, std::uint64_t budget);
CommandResult cmd_semidirect(const Input& rep);

} // namespace rbx
