//! The law catalogue: every law id a report can contain, with the statement
//! it checks.

pub static LAWS: &[(&str, &str)] = &[
    ("core.fiber.union_of_fibers", "for monic f and B ⊆ Im f, f[A] = B iff A is the union of the fibers of B"),
    ("core.image.galois", "f[A] ⊆ B iff A ⊆ f⁻¹[B]"),
    ("core.image.image_of_preimage", "f[f⁻¹[B]] ⊆ B"),
    ("core.image.image_of_preimage_onto", "f onto implies f[f⁻¹[B]] = B"),
    ("core.image.intersection", "f[⋂X] ⊆ ⋂f[X]"),
    ("core.image.intersection_monic", "f monic implies f[⋂X] = ⋂f[X] for nonempty X"),
    ("core.image.preimage_of_image", "A ⊆ f⁻¹[f[A]]"),
    ("core.image.preimage_of_image_monic", "f monic implies f⁻¹[f[A]] = A"),
    ("core.image.restriction_preimage", "(f|A)⁻¹[B] = A ∩ f⁻¹[B]"),
    ("core.image.union", "f[⋃X] = ⋃f[X]"),
    ("core.natural_pair.square", "G(sa x) = sb(F x) for every x"),
    ("core.preimage.difference", "f⁻¹[B1 − B2] = f⁻¹[B1] − f⁻¹[B2]"),
    ("core.preimage.intersection", "f⁻¹[⋂Y] = ⋂f⁻¹[Y]"),
    ("core.preimage.union", "f⁻¹[⋃Y] = ⋃f⁻¹[Y]"),
    ("numbers.discrete.succ_order_bijective", "the successor is an order bijectivity from [-n, n-1] onto [-n+1, n]"),
    ("numbers.discrete.unique_successor", "each interior object is the source of one successor arrow and the target of one"),
    ("numbers.dual.p_is_r", "a/-c = -a/c"),
    ("numbers.dual.p_reverses", "a/c ↦ a/-c reverses the order"),
    ("numbers.dual.q_involution", "q(q x) = x"),
    ("numbers.dual.q_preserves", "q = p∘r preserves the order"),
    ("numbers.dual.r_reverses", "a/c ↦ -a/c reverses the order"),
    ("numbers.dual.row_column", "x/c ≤ y/c iff a/y ≤ a/x"),
    ("numbers.embed.add", "ι(a + b) = ι a + ι b"),
    ("numbers.embed.injective", "ι a = ι b implies a = b"),
    ("numbers.embed.mul", "ι(a · b) = ι a · ι b"),
    ("numbers.embed.order", "a ≤ b iff ι a ≤ ι b"),
    ("numbers.int.add_oracle", "the composed successor sum equals the exact sum"),
    ("numbers.int.associative", "(a + b) + c = a + (b + c)"),
    ("numbers.int.commutative", "a + b = b + a"),
    ("numbers.int.functors_commute", "+a ∘ +b = +b ∘ +a where both are defined"),
    ("numbers.int.inverse", "a + (-a) = 0"),
    ("numbers.int.mul_associative", "(a · b) · c = a · (b · c)"),
    ("numbers.int.mul_commutative", "a · b = b · a"),
    ("numbers.int.mul_distributive", "(a + b) · x = a · x + b · x"),
    ("numbers.int.mul_oracle", "the recursive product equals the exact product"),
    ("numbers.int.natural_transformation", "a ≤ b implies x + a ≤ x + b for every x"),
    ("numbers.int.shift_embedding", "+a is an order embedding on its domain"),
    ("numbers.int.unit", "a + 0 = a = 0 + a"),
    ("numbers.rat.add_associative", "(p + q) + s = p + (q + s)"),
    ("numbers.rat.add_commutative", "p + q = q + p"),
    ("numbers.rat.add_inverse", "p + (-p) = 0"),
    ("numbers.rat.add_unit", "p + 0 = p"),
    ("numbers.rat.antisymmetric", "p ≤ q and q ≤ p imply p = q"),
    ("numbers.rat.canon_equal", "the canonical form equals the original"),
    ("numbers.rat.canon_idempotent", "canon(canon p) = canon p"),
    ("numbers.rat.eq_is_canon", "p = q iff canon p = canon q"),
    ("numbers.rat.grid_natural", "the order on the grid of classes is natural"),
    ("numbers.rat.mul_associative", "(p q) s = p (q s)"),
    ("numbers.rat.mul_commutative", "p q = q p"),
    ("numbers.rat.mul_inverse", "p · p⁻¹ = 1 for p ≠ 0"),
    ("numbers.rat.mul_unit", "p · 1 = p"),
    ("numbers.rat.reflexive", "p ≤ p"),
    ("numbers.rat.scaling", "p ≤ q implies p s ≤ q s for s > 0 and q s ≤ p s for s < 0"),
    ("numbers.rat.sign_swap", "-a/c = a/-c"),
    ("numbers.rat.total", "p ≤ q or q ≤ p"),
    ("numbers.rat.transitive", "p ≤ q and q ≤ s imply p ≤ s"),
    ("numbers.rat.well_defined", "p · x/x = p and p + 0/x = p"),
    ("order.antisymmetric", "a ≤ b and b ≤ a imply a = b"),
    ("order.complete.bounded_duality", "upper bound complete iff lower bound complete"),
    ("order.complete.finite_directed", "every directed subset of a finite order has a supremum"),
    ("order.complete.inf_is_sup_of_lower", "inf A, when it exists, is the supremum of the lower bounds of A"),
    ("order.complete.lattice_directed", "a complete lattice and its opposite are directed complete"),
    ("order.complete.natural_fixpoint", "naturally complete iff every monotone self-map has a least fixed point"),
    ("order.complete.natural_implies_is", "naturally complete implies IS-complete"),
    ("order.galois.comparable", "f p ≤ q iff p ≤ g q"),
    ("order.galois.counit", "f(g q) ≤ q"),
    ("order.galois.equivalence", "the monotone form and the comparability form agree"),
    ("order.galois.f_monotone", "f preserves the order"),
    ("order.galois.g_monotone", "g preserves the order"),
    ("order.galois.unit", "p ≤ g(f p)"),
    ("order.lattice.absorption", "x ∨ (x ∧ y) = x and x ∧ (x ∨ y) = x"),
    ("order.lattice.associative", "join and meet are associative"),
    ("order.lattice.commutative", "join and meet are commutative"),
    ("order.lattice.finite_sup", "the supremum of a finite nonempty set is the iterated join"),
    ("order.lattice.idempotent", "x ∨ x = x = x ∧ x"),
    ("order.lattice.join_is_sup", "x ∨ y = sup {x,y} and x ∧ y = inf {x,y}"),
    ("order.lattice.monotone", "x ≤ y implies x ∨ z ≤ y ∨ z and x ∧ z ≤ y ∧ z"),
    ("order.lattice.order_from_tables", "x ≤ y iff x ∨ y = y iff x ∧ y = x"),
    ("order.lattice.sup_of_union", "sup (A ∪ B) = sup A ∨ sup B"),
    ("order.lattice.units", "the unit of join is the minimum, the unit of meet the maximum"),
    ("order.map.dual_invariance", "f is order bijective iff it is so between the opposite orders"),
    ("order.map.dual_preserving", "f preserves P → Q iff it preserves P^op → Q^op"),
    ("order.map.embedding_monic", "an order embedding is monic"),
    ("order.map.order_bijective_bijective", "an order bijectivity is bijective"),
    ("order.reflexive", "a ≤ a"),
    ("order.transitive", "a ≤ b and b ≤ c imply a ≤ c"),
    ("settools.filter.contains_base", "B ⊆ ⟨B⟩"),
    ("settools.filter.downward_directed", "a filter is directed under reverse inclusion"),
    ("settools.filter.fixed_iff_filter", "⟨B⟩ = B iff B is a filter"),
    ("settools.filter.generated_is_filter", "⟨B⟩ is a filter for every base B"),
    ("settools.filter.minimal", "B ⊆ F for a filter F implies ⟨B⟩ ⊆ F"),
    ("settools.filter.union_of_principal", "a filter is the union of the principal filters of its members"),
    ("settools.images.backward_is_fiber", "f←B is the fiber of 𝔓f over B"),
    ("settools.images.bijective", "f bijective implies f[X] = f[[X]]"),
    ("settools.images.fiber_max", "for B in the image of 𝔓f, f⁻¹B = ⋃f←B is the maximum of f←B"),
    ("settools.images.forward_bracket", "f→A ⊆ {Y : f[A] ⊆ Y ⊆ f[A] ∪ (cod − Im f)}"),
    ("settools.images.forward_bracket_monic", "f monic implies f→A = {Y : f[A] ⊆ Y ⊆ f[A] ∪ (cod − Im f)}"),
    ("settools.images.monic_inverse", "f monic implies A ∈ f⁻¹[Y] iff A is the union of the fibers of some B ∈ Y with B ⊆ Im f"),
    ("settools.images.onto_direct", "f onto implies B ∈ f[X] iff ⋃f←B ∈ X"),
    ("settools.images.theorem_direct", "for B ⊆ Im f, B ∈ f[X] iff ⋃f←B ∈ X"),
    ("settools.images.theorem_inverse", "f monic implies A ∈ f⁻¹[Y] iff ⋂f→A ∈ Y"),
    ("settools.nest.decreasing_first", "A₁ = ⋃(Aᵢ − Aᵢ₊₁) ∪ Aₙ, a disjoint union, for a decreasing nest"),
    ("settools.nest.increasing_prefix", "Aₖ = B₁ ∪ … ∪ Bₖ for an increasing nest with Bᵢ = Aᵢ − Aᵢ₋₁"),
    ("settools.nest.increasing_union", "⋃Aᵢ = ⋃Bᵢ with the Bᵢ pairwise disjoint"),
    ("settools.power.composition", "𝔓(g∘f) = 𝔓g∘𝔓f"),
    ("settools.power.family_bound", "A and B belong to P(A ∪ B)"),
    ("settools.power.identity", "𝔓 sends identities to identities"),
    ("settools.power.image", "𝔓f(A) = f[A]"),
    ("settools.power.intersection", "P(A ∩ B) = PA ∩ PB"),
    ("settools.power.monotone", "A ⊆ B implies PA ⊆ PB and f[A] ⊆ f[B]"),
    ("settools.power.union", "PA ∪ PB ⊆ P(A ∪ B)"),
    ("settools.power.union_of_power", "⋃PA = A"),
    ("settools.refine.extensive", "B ⊆ ⟨B⟩"),
    ("settools.refine.filter_antisymmetric", "refinement is antisymmetric on filters"),
    ("settools.refine.filter_inclusion", "for filters, F ⊆ G iff F ⪯ G"),
    ("settools.refine.idempotent", "⟨⟨B⟩⟩ = ⟨B⟩"),
    ("settools.refine.monotone", "B ⊆ C implies ⟨B⟩ ⊆ ⟨C⟩"),
    ("settools.refine.mutual_iff_same_filter", "B ⪯ C and C ⪯ B iff ⟨B⟩ = ⟨C⟩"),
    ("settools.refine.reflexive", "B ⪯ B"),
    ("settools.refine.transitive", "B ⪯ C and C ⪯ D imply B ⪯ D"),
    ("settools.sets.decomposition", "A = (A ∩ B) ∪ (A − B), a disjoint union"),
    ("settools.sets.demorgan", "(⋃X)ᶜ = ⋂Xᶜ and (⋂X)ᶜ = ⋃Xᶜ"),
    ("settools.sets.difference_complement", "A − B = A ∩ Bᶜ"),
    ("settools.sets.difference_union", "(A − B) − C = A − (B ∪ C)"),
    ("settools.sets.distribute_family", "A ∩ ⋃X = ⋃(A ∩ X) and A ∪ ⋂X = ⋂(A ∪ X)"),
    ("settools.sets.distribute_intersection", "A ∩ (B ∪ C) = (A ∩ B) ∪ (A ∩ C)"),
    ("settools.sets.distribute_union", "A ∪ (B ∩ C) = (A ∪ B) ∩ (A ∪ C)"),
    ("settools.sets.union_decomposition", "A ∪ B = A ∪ (B − A), a disjoint union"),
    ("settools.sigma.contains_generators", "B ⊆ σ(B)"),
    ("settools.sigma.fixed_point", "σ(σ(B)) = σ(B)"),
    ("settools.sigma.intersection", "σ(B) = ⋂Σ(B)"),
    ("settools.sigma.terminates", "closure iteration stops within |P(P(X))| rounds"),
    ("settools.transport.backward_iff_meeting", "f⁻¹[[B]] is a base iff every member of B meets Im f"),
    ("settools.transport.forward_base", "f[[B]] is a base for every base B"),
    ("settools.transport.generated_is_direct", "⟨f[[B]]⟩ = f[⟨B⟩]"),
    ("settools.ultra.count", "a finite carrier has exactly as many ultrafilters as points"),
    ("settools.ultra.maximal", "a filter is ultra iff it is maximal under refinement"),
    ("settools.ultra.point", "⟨x⟩ is an ultrafilter"),
    ("settools.ultra.principal", "every ultrafilter on a finite carrier is ⟨x⟩ for a point x"),
    ("settools.ultra.union_absorbs", "F ultra and F ∪ G a filter imply F ∪ G ultra"),
    ("settools.ultra.union_prime", "a filter is ultra iff F ∪ G in it implies F or G in it"),
    ("settools.ultra.union_split", "F ∪ G ultra implies F or G ultra"),
    ("top.base.closure_equivalence", "the closure in terms of a base equals the closure from the closed sets of its topology"),
    ("top.base.criterion", "B is a base iff x ∈ V ∈ O gives U ∈ B with x ∈ U ⊆ V"),
    ("top.base.open_sets", "the generated open sets form a topology"),
    ("top.closed.finite_union", "a finite union of closed sets is closed"),
    ("top.closed.intersection", "an intersection of closed sets is closed"),
    ("top.closed.recovered", "the closed sets of Cl A = ⋂{D ∈ C : A ⊆ D} are exactly C"),
    ("top.closure.empty", "Cl ∅ = ∅"),
    ("top.closure.extensive", "A ⊆ Cl A"),
    ("top.closure.idempotent", "Cl Cl A = Cl A"),
    ("top.closure.monotone", "A ⊆ B implies Cl A ⊆ Cl B"),
    ("top.closure.point", "Cl {x} = {x}"),
    ("top.closure.union", "Cl (A ∪ B) = Cl A ∪ Cl B"),
    ("top.nbhd.base_is_point_base", "a base is a point base of every point"),
    ("top.nbhd.base_nbhds_point_base", "the base-neighborhoods of x form a point base of x"),
    ("top.nbhd.open_iff_nbhd", "a set is open iff it is a neighborhood of each of its points"),
    ("top.open.complement_closed", "V is open iff its complement is closed"),
    ("top.open.intersection", "a finite intersection of open sets is open"),
    ("top.open.union", "a union of open sets is open"),
    ("group.action.hom", "(a·b)∗̄x = a∗̄(b∗̄x)"),
    ("group.action.nucleus_normal", "the nucleus of an action is a normal subgroup"),
    ("group.action.nucleus_stabilizers", "Nul = ⋂ Inv(x) over the points x"),
    ("group.action.unit", "e∗̄x = x"),
    ("group.associative", "(a·b)·c = a·(b·c)"),
    ("group.cancellation", "a·b = a·c or b·a = c·a implies b = c"),
    ("group.center.central_normal", "every subgroup of the center is normal"),
    ("group.center.subgroup", "the center is a subgroup"),
    ("group.commutant.abelian_quotient", "G/[G,G] is abelian"),
    ("group.commutant.inverse_no_growth", "the product closure of the commutators is closed under inverses"),
    ("group.commutant.minimal", "for normal N, G/N is abelian iff [G,G] ⊆ N"),
    ("group.commutant.normal", "[G,G] is a normal subgroup"),
    ("group.commutator.inverse", "[a,b]⁻¹ = [b,a]"),
    ("group.coset.class_relation", "a ∈ Hx iff a = h·x for some h ∈ H iff a·x⁻¹ ∈ H"),
    ("group.coset.contains_subgroup", "H is one of its own cosets"),
    ("group.coset.lagrange", "|H| divides |G| and |G| = |H| times the number of cosets"),
    ("group.coset.member", "x lies in its own coset"),
    ("group.coset.partition", "the cosets partition G"),
    ("group.coset.sides_equinumerous", "there are as many left cosets as right cosets"),
    ("group.coset.translation_bijective", "translation by x maps H bijectively onto its coset"),
    ("group.coset_action.fixes_iff_member", "x∗̄H = H iff x ∈ H"),
    ("group.coset_action.normal_in_nucleus", "a normal subgroup of G inside H lies in the nucleus"),
    ("group.coset_action.nucleus_conjugates", "the nucleus of the coset action is ⋂ xHx⁻¹"),
    ("group.coset_action.nucleus_inside", "the nucleus of the coset action lies in H"),
    ("group.coset_action.transitive", "the action on the cosets of H is transitive"),
    ("group.cyclic.abelian_subgroup", "⟨a⟩ is an abelian subgroup"),
    ("group.double_inverse", "(a⁻¹)⁻¹ = a"),
    ("group.hom.image_normal_epi", "an onto homomorphism maps normal subgroups to normal subgroups"),
    ("group.hom.image_subgroup", "the image of a subgroup is a subgroup"),
    ("group.hom.inverse", "h(a⁻¹) = h(a)⁻¹"),
    ("group.hom.kernel_normal", "the kernel is a normal subgroup"),
    ("group.hom.preimage_normal", "the preimage of a normal subgroup is normal"),
    ("group.hom.preimage_subgroup", "the preimage of a subgroup is a subgroup"),
    ("group.hom.product", "h(a·b) = h(a)·h(b)"),
    ("group.hom.unit", "h(e) = e"),
    ("group.inner.automorphism", "each conjugation a ↦ x·a·x⁻¹ is an automorphism"),
    ("group.inner.epimorphism", "x ↦ conjugation by x is a homomorphism onto Inn(G)"),
    ("group.inner.kernel_is_center", "the kernel of x ↦ conjugation by x is the center"),
    ("group.inner.normal_in_aut", "Inn(G) is normal in Aut(G)"),
    ("group.inner.quotient_iso", "Inn(G) ≅ G/Z(G)"),
    ("group.inverse", "a·a⁻¹ = a⁻¹·a = e"),
    ("group.iso.bijective", "G/Nul h → Im h is bijective"),
    ("group.iso.count", "|G| = |Nul h|·|Im h|"),
    ("group.iso.epi_trivial_kernel", "an onto homomorphism with trivial kernel is an isomorphism"),
    ("group.iso.hom", "G/Nul h → Im h is a homomorphism"),
    ("group.iso.well_defined", "(Nul h)x ↦ h(x) does not depend on the representative"),
    ("group.linear.automorphism", "each nonzero scalar acts by an automorphism"),
    ("group.linear.forms_agree", "the homomorphism form and the axiom form agree"),
    ("group.linear.mul_hom", "(a·b)∗̄ = a∗̄ ∘ b∗̄ for nonzero scalars"),
    ("group.linear.scalar_assoc", "(a·b)∗̄u = a∗̄(b∗̄u)"),
    ("group.linear.scalar_sum", "(a+b)∗̄u = (a∗̄u)·(b∗̄u)"),
    ("group.linear.unit_scalar", "1∗̄u = u"),
    ("group.linear.vector_sum", "a∗̄(u·v) = (a∗̄u)·(a∗̄v)"),
    ("group.normal.abelian", "every subgroup of an abelian group is normal"),
    ("group.normal.criteria_agree", "xN = Nx, xNx⁻¹ = N and xNx⁻¹ ⊆ N agree"),
    ("group.power.abelian_product", "(a·b)↑n = a↑n·b↑n in an abelian group"),
    ("group.power.additive", "a↑(m+n) = a↑m·a↑n"),
    ("group.power.negative", "a↑(−n) = (a↑n)⁻¹"),
    ("group.power.successor", "a↑(n+1) = a↑n·a"),
    ("group.power.zero", "a↑0 = e"),
    ("group.quotient.abelian_inherits", "G abelian implies G/N abelian"),
    ("group.quotient.order", "|G/N|·|N| = |G|"),
    ("group.quotient.projection_hom", "x ↦ Nx is an onto homomorphism"),
    ("group.quotient.trivial", "G/{e} ≅ G and G/G ≅ {e}"),
    ("group.quotient.well_defined_iff_normal", "Nx·Ny = N(xy) is well defined iff N is normal"),
    ("group.stabilizer.conjugate", "x ∈ G_{a↦b} implies Inv(b) = x·Inv(a)·x⁻¹"),
    ("group.stabilizer.coset_bijection", "b ↦ G_{a↦b} is a bijection onto the cosets of Inv(a)"),
    ("group.stabilizer.nucleus", "Nul = ⋂ Inv(x)"),
    ("group.stabilizer.similar", "a transitive action is similar to the coset action on G/x·Inv(a)"),
    ("group.stabilizer.subgroup", "Inv(a) is a subgroup"),
    ("group.stabilizer.transporter_coset", "G_{a↦b} is a left coset of Inv(a)"),
    ("group.subgroup.criteria_agree", "H is a group, HH⁻¹ ⊆ H, and HH ⊆ H with H⁻¹ ⊆ H agree"),
    ("group.subgroup.enumeration", "adjoining elements from {e} finds every subgroup"),
    ("group.unique_solution", "a·x = b and y·a = b have unique solutions"),
    ("group.unit", "e·a = a·e = a"),
    ("cat.arrow.inverse_unique", "an invertible arrow has exactly one inverse"),
    ("cat.arrow.left_inverse_cancels", "a left invertible arrow is left cancellable"),
    ("cat.arrow.right_inverse_cancels", "a right invertible arrow is right cancellable"),
    ("cat.arrows.distinct", "arrow names are distinct"),
    ("cat.arrows.endpoints", "every arrow has a source and a target among the objects"),
    ("cat.associative", "h∘(g∘f) = (h∘g)∘f on composable triples"),
    ("cat.bifunctor.composition", "𝔅(h∘f, i∘g) = 𝔅(f, i)∘𝔅(h, g)"),
    ("cat.bifunctor.endpoints", "𝔅(f, g): 𝔅(c, b) → 𝔅(a, d) for f: a → c, g: b → d"),
    ("cat.bifunctor.left_right", "𝔅 respects the composition (f, i)∘(h, g) = (h∘f, i∘g) of C1^op × C2"),
    ("cat.bifunctor.unit", "𝔅(1_a, 1_b) = 1_𝔅(a,b)"),
    ("cat.bridge.thin_natural", "into a category with at most one arrow between two objects every bridge is natural"),
    ("cat.comp.domain", "compositions are declared only for composable pairs"),
    ("cat.comp.endpoints", "g∘f runs from the source of f to the target of g"),
    ("cat.comp.known", "compositions mention declared arrows"),
    ("cat.comp.single", "each composable pair has one composite"),
    ("cat.comp.total", "every composable pair has a composite"),
    ("cat.contra.composition", "𝔉(g∘f) = 𝔉f∘𝔉g"),
    ("cat.contra.objects", "𝔉f: 𝔉b → 𝔉a for f: a → b"),
    ("cat.contra.unit", "𝔉1_x = 1_𝔉x"),
    ("cat.functor.composition", "𝔉(g∘f) = 𝔉g∘𝔉f"),
    ("cat.functor.objects", "𝔉f: 𝔉a → 𝔉b for f: a → b"),
    ("cat.functor.preserves_iso", "functors send isomorphisms to isomorphisms"),
    ("cat.functor.unit", "𝔉1_x = 1_𝔉x"),
    ("cat.identity.exists", "every object has one identity arrow x → x"),
    ("cat.interchange", "(β·α)∘(σ·τ) = (β∘σ)·(α∘τ)"),
    ("cat.iso.equivalence", "being isomorphic is an equivalence relation on objects"),
    ("cat.nat.square", "τb∘𝔉f = 𝔊f∘τa for every f: a → b"),
    ("cat.op.category", "the opposite of a category is a category"),
    ("cat.op.composition", "(𝔊∘𝔉)^op = 𝔊^op∘𝔉^op"),
    ("cat.op.functor", "the opposite of a functor is a functor"),
    ("cat.op.identity", "(1_C)^op = 1_(C^op)"),
    ("cat.op.involution", "(C^op)^op = C"),
    ("cat.setfunctor.composition", "the map of a composite is the composite of the maps"),
    ("cat.setfunctor.objects", "𝔉f runs between the sets of its endpoints"),
    ("cat.setfunctor.unit", "identities go to identity maps"),
    ("cat.unit.left", "1_b∘f = f for f: a → b"),
    ("cat.unit.right", "f∘1_a = f for f: a → b"),
    ("cat.yoneda.bijective", "φ: Nat(𝔏_a, 𝔉) → 𝔉a, τ ↦ τa(1_a) is bijective"),
    ("cat.yoneda.embedding_faithful", "f ↦ f† is monic on {b → a} → Nat(𝔏_a, 𝔏_b)"),
    ("cat.yoneda.embedding_full", "f ↦ f† is onto Nat(𝔏_a, 𝔏_b)"),
    ("cat.yoneda.inverse", "x ↦ τ_x with τ_x c(f) = 𝔉f(x) inverts φ"),
    ("cat.yoneda.inverse_natural", "τ_x is natural"),
    ("cat.yoneda.phi_natural", "φ is natural in the functor and the object"),
    ("cat.yoneda.tau_natural", "the transformations used to test φ are natural"),
    ("core.compose.associative", "h∘(g∘f) = (h∘g)∘f"),
    ("core.compose.identity", "1∘f = f = f∘1"),
    ("core.decompose.immersion_monic", "the inclusion of the range is monic"),
    ("core.decompose.projection_onto", "the projection onto the fibers is onto"),
    ("core.decompose.quotient_bijective", "the induced map from fibers to the range is bijective"),
    ("core.decompose.recompose", "f is the inclusion of its range after the induced map after the projection"),
    ("order.chain.maximal", "an extended chain admits no further comparable element"),
    ("order.lattice.exists_iff_pairwise", "join and meet tables exist iff every pair has a supremum and an infimum"),
    ("order.lattice.roundtrip", "the order read off the join table is the original order"),
    ("order.semilattice.associative", "(x⋄y)⋄z = x⋄(y⋄z)"),
    ("order.semilattice.commutative", "x⋄y = y⋄x"),
    ("order.semilattice.idempotent", "x⋄x = x"),
    ("order.zorn.bounded", "a maximal element is produced iff every chain has an upper bound"),
    ("order.zorn.maximal", "the element produced is maximal"),
    ("settools.base.directed", "any two members contain a common member"),
    ("settools.base.no_empty_member", "no member is empty"),
    ("settools.base.nonempty", "the base has a member"),
    ("top.enum.count", "there are exactly 29 topologies on three points"),
    ("top.open.bounds", "∅ and the carrier are open"),
    ("top.base.covers", "the members of a base cover the carrier"),
    ("top.strict.discrete_only", "the strict closure axioms admit only the identity table"),
    ("group.s3.abelianization", "S3/[S3,S3] is abelian of order 2"),
    ("group.s3.center", "the center of S3 is {e}"),
    ("group.s3.commutant", "[S3,S3] has order 3"),
    ("group.s3.inner", "Inn(S3) has order 6"),
    ("cat.defect.found", "the associativity search reports the planted triple as its least witness"),
    ("cat.hcompose.agree", "α(𝔥x)∘𝔤(τx) = 𝔦(τx)∘α(𝔣x)"),
    ("cat.yoneda.count", "|Nat(𝔏_a, 𝔉)| = |𝔉a|"),
    ("cli.exit_code", "exit code 0 on pass, 1 on a law failure, 2 on a usage or parse error"),
    ("cli.jobs", "reports agree byte for byte across worker counts"),
    ("cli.roundtrip", "rendering a parsed document reproduces it byte for byte"),
];

pub fn statement(law: &str) -> Option<&'static str> {
    LAWS.iter().find(|(id, _)| *id == law).map(|(_, s)| *s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_unique() {
        let ids: std::collections::BTreeSet<&str> = LAWS.iter().map(|(id, _)| *id).collect();
        assert_eq!(ids.len(), LAWS.len());
    }
}
