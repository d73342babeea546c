/// @file templates.h
/// The built-in extension templates.
///
///   T1  goal -> final step of the assessed workflow
///   T2  workflow step -> its preceding step
///   T3  workflow step -> actor (and received message) availability
///   T4  actor -> devices playing the actor's role
///   T5  device component -> sub-components from the composition tree
///   T6  leaf component -> attack steps targeting it
///   T7  attack step -> attacker properties it requires
///
/// All built-in scores are 0 or 1.

#ifndef SAGEN_TEMPLATES_H_
#define SAGEN_TEMPLATES_H_

#include "sagen/engine.h"

namespace sagen {

TemplatePtr make_goal_to_workflow();        // T1
TemplatePtr make_previous_steps();          // T2
TemplatePtr make_actor_requirements();      // T3
TemplatePtr make_actor_to_devices();        // T4
TemplatePtr make_decompose_component();     // T5
TemplatePtr make_attacks_on_leaves();       // T6
TemplatePtr make_attack_requirements();     // T7

/// {T1, T2, T3}
TemplateSet goal_stage_templates();
/// {T4, T5}
TemplateSet system_stage_templates();
/// {T6, T7}
TemplateSet attacker_stage_templates();

/// Pattern matching for T6: the component path equals the target or ends
/// with it as its last segment, and the device type descends from (or is)
/// the target type.
bool attack_targets(const AttackPattern& pattern, const std::string& path,
                    const std::string& device_type, const TypeHierarchy& types);

}  // namespace sagen

#endif  // SAGEN_TEMPLATES_H_
