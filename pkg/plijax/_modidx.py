# Autogenerated by nbdev

d = { 'settings': { 'branch': 'main',
                'doc_baseurl': '/plijax',
                'doc_host': 'https://rodrigodzf.github.io',
                'git_url': 'https://github.com/rodrigodzf/plijax',
                'lib_path': 'plijax'},
  'syms': { 'plijax.distributions.divergence': {
                'plijax.distributions.divergence.kl_divergence': ('distributions/divergence.html#kl_divergence', 'plijax/distributions/divergence.py')},
            'plijax.distributions.families': {
                'plijax.distributions.families.FamilyTag': ('distributions/families.html#familytag', 'plijax/distributions/families.py'),
                'plijax.distributions.families.FamilyTag.parse': ('distributions/families.html#familytag.parse', 'plijax/distributions/families.py'),
                'plijax.distributions.families.n_params': ('distributions/families.html#n_params', 'plijax/distributions/families.py'),
                'plijax.distributions.families.in_domain': ('distributions/families.html#in_domain', 'plijax/distributions/families.py'),
                'plijax.distributions.families.DistributionSpec': ('distributions/families.html#distributionspec', 'plijax/distributions/families.py'),
                'plijax.distributions.families.DistributionSpec.__post_init__': ('distributions/families.html#distributionspec.__post_init__', 'plijax/distributions/families.py'),
                'plijax.distributions.families.DistributionSpec.r': ('distributions/families.html#distributionspec.r', 'plijax/distributions/families.py'),
                'plijax.distributions.families.DistributionSpec.has_fisher_structure': ('distributions/families.html#distributionspec.has_fisher_structure', 'plijax/distributions/families.py'),
                'plijax.distributions.families.DistributionSpec.with_theta': ('distributions/families.html#distributionspec.with_theta', 'plijax/distributions/families.py'),
                'plijax.distributions.families.DistributionSpec.__str__': ('distributions/families.html#distributionspec.__str__', 'plijax/distributions/families.py'),
                'plijax.distributions.families.parent': ('distributions/families.html#parent', 'plijax/distributions/families.py'),
                'plijax.distributions.families.integration_bounds': ('distributions/families.html#integration_bounds', 'plijax/distributions/families.py'),
                'plijax.distributions.families.pdf': ('distributions/families.html#pdf', 'plijax/distributions/families.py'),
                'plijax.distributions.families.logpdf': ('distributions/families.html#logpdf', 'plijax/distributions/families.py'),
                'plijax.distributions.families.cdf': ('distributions/families.html#cdf', 'plijax/distributions/families.py'),
                'plijax.distributions.families.sf': ('distributions/families.html#sf', 'plijax/distributions/families.py'),
                'plijax.distributions.families.inverse_cdf': ('distributions/families.html#inverse_cdf', 'plijax/distributions/families.py'),
                'plijax.distributions.families.quantile': ('distributions/families.html#quantile', 'plijax/distributions/families.py'),
                'plijax.distributions.families.sample': ('distributions/families.html#sample', 'plijax/distributions/families.py'),
                'plijax.distributions.families.log_density': ('distributions/families.html#log_density', 'plijax/distributions/families.py'),
                'plijax.distributions.families.domain_check': ('distributions/families.html#domain_check', 'plijax/distributions/families.py'),
                'plijax.distributions.families.spec_from_dict': ('distributions/families.html#spec_from_dict', 'plijax/distributions/families.py'),
                'plijax.distributions.families.spec_to_dict': ('distributions/families.html#spec_to_dict', 'plijax/distributions/families.py')},
            'plijax.distributions.fisher': {
                'plijax.distributions.fisher.FisherMatrix': ('distributions/fisher.html#fishermatrix', 'plijax/distributions/fisher.py'),
                'plijax.distributions.fisher.FisherMatrix.is_positive_definite': ('distributions/fisher.html#fishermatrix.is_positive_definite', 'plijax/distributions/fisher.py'),
                'plijax.distributions.fisher.FisherMatrix.cholesky': ('distributions/fisher.html#fishermatrix.cholesky', 'plijax/distributions/fisher.py'),
                'plijax.distributions.fisher.FisherMatrix.inverse': ('distributions/fisher.html#fishermatrix.inverse', 'plijax/distributions/fisher.py'),
                'plijax.distributions.fisher.score': ('distributions/fisher.html#score', 'plijax/distributions/fisher.py'),
                'plijax.distributions.fisher.quadrature_rule': ('distributions/fisher.html#quadrature_rule', 'plijax/distributions/fisher.py'),
                'plijax.distributions.fisher.fisher_information': ('distributions/fisher.html#fisher_information', 'plijax/distributions/fisher.py'),
                'plijax.distributions.fisher.make_metric': ('distributions/fisher.html#make_metric', 'plijax/distributions/fisher.py'),
                'plijax.distributions.fisher.make_metric_gradient': ('distributions/fisher.html#make_metric_gradient', 'plijax/distributions/fisher.py'),
                'plijax.distributions.fisher.fisher_information_gradient': ('distributions/fisher.html#fisher_information_gradient', 'plijax/distributions/fisher.py'),
                'plijax.distributions.fisher.fisher_inner_product': ('distributions/fisher.html#fisher_inner_product', 'plijax/distributions/fisher.py')},
            'plijax.estimation.bootstrap': {
                'plijax.estimation.bootstrap.BootstrapResult': ('estimation/bootstrap.html#bootstrapresult', 'plijax/estimation/bootstrap.py'),
                'plijax.estimation.bootstrap.bootstrap_replicates': ('estimation/bootstrap.html#bootstrap_replicates', 'plijax/estimation/bootstrap.py'),
                'plijax.estimation.bootstrap.bootstrap': ('estimation/bootstrap.html#bootstrap', 'plijax/estimation/bootstrap.py')},
            'plijax.estimation.iosample': {
                'plijax.estimation.iosample.IOSample': ('estimation/iosample.html#iosample', 'plijax/estimation/iosample.py'),
                'plijax.estimation.iosample.IOSample.__post_init__': ('estimation/iosample.html#iosample.__post_init__', 'plijax/estimation/iosample.py'),
                'plijax.estimation.iosample.IOSample.N': ('estimation/iosample.html#iosample.n', 'plijax/estimation/iosample.py'),
                'plijax.estimation.iosample.IOSample.d': ('estimation/iosample.html#iosample.d', 'plijax/estimation/iosample.py'),
                'plijax.estimation.iosample.IOSample.take': ('estimation/iosample.html#iosample.take', 'plijax/estimation/iosample.py'),
                'plijax.estimation.iosample.IOSample.index_of': ('estimation/iosample.html#iosample.index_of', 'plijax/estimation/iosample.py'),
                'plijax.estimation.iosample.IOSample.equals': ('estimation/iosample.html#iosample.equals', 'plijax/estimation/iosample.py')},
            'plijax.estimation.quantile': {
                'plijax.estimation.quantile.Direction': ('estimation/quantile.html#direction', 'plijax/estimation/quantile.py'),
                'plijax.estimation.quantile.Direction.for_alpha': ('estimation/quantile.html#direction.for_alpha', 'plijax/estimation/quantile.py'),
                'plijax.estimation.quantile.empirical_quantile': ('estimation/quantile.html#empirical_quantile', 'plijax/estimation/quantile.py'),
                'plijax.estimation.quantile.likelihood_ratios': ('estimation/quantile.html#likelihood_ratios', 'plijax/estimation/quantile.py'),
                'plijax.estimation.quantile.WeightedCdf': ('estimation/quantile.html#weightedcdf', 'plijax/estimation/quantile.py'),
                'plijax.estimation.quantile.WeightedCdf.from_ratios': ('estimation/quantile.html#weightedcdf.from_ratios', 'plijax/estimation/quantile.py'),
                'plijax.estimation.quantile.WeightedCdf.weights': ('estimation/quantile.html#weightedcdf.weights', 'plijax/estimation/quantile.py'),
                'plijax.estimation.quantile.WeightedCdf.evaluate': ('estimation/quantile.html#weightedcdf.evaluate', 'plijax/estimation/quantile.py'),
                'plijax.estimation.quantile.WeightedCdf.quantile': ('estimation/quantile.html#weightedcdf.quantile', 'plijax/estimation/quantile.py'),
                'plijax.estimation.quantile.weighted_cdf': ('estimation/quantile.html#weighted_cdf', 'plijax/estimation/quantile.py'),
                'plijax.estimation.quantile.weighted_quantiles': ('estimation/quantile.html#weighted_quantiles', 'plijax/estimation/quantile.py'),
                'plijax.estimation.quantile.exceed_count': ('estimation/quantile.html#exceed_count', 'plijax/estimation/quantile.py'),
                'plijax.estimation.quantile.perturbed_quantile': ('estimation/quantile.html#perturbed_quantile', 'plijax/estimation/quantile.py'),
                'plijax.estimation.quantile.admissible': ('estimation/quantile.html#admissible', 'plijax/estimation/quantile.py'),
                'plijax.estimation.quantile.effective_sample_size': ('estimation/quantile.html#effective_sample_size', 'plijax/estimation/quantile.py'),
                'plijax.estimation.quantile.resampled_quantile': ('estimation/quantile.html#resampled_quantile', 'plijax/estimation/quantile.py')},
            'plijax.models.analytic': {
                'plijax.models.analytic.ModelKind': ('models/analytic.html#modelkind', 'plijax/models/analytic.py'),
                'plijax.models.analytic.ModelKind.parse': ('models/analytic.html#modelkind.parse', 'plijax/models/analytic.py'),
                'plijax.models.analytic.ishigami': ('models/analytic.html#ishigami', 'plijax/models/analytic.py'),
                'plijax.models.analytic.flood': ('models/analytic.html#flood', 'plijax/models/analytic.py'),
                'plijax.models.analytic.builtin_input_specs': ('models/analytic.html#builtin_input_specs', 'plijax/models/analytic.py'),
                'plijax.models.analytic.builtin_input_names': ('models/analytic.html#builtin_input_names', 'plijax/models/analytic.py'),
                'plijax.models.analytic.ModelSpec': ('models/analytic.html#modelspec', 'plijax/models/analytic.py'),
                'plijax.models.analytic.ModelSpec.__post_init__': ('models/analytic.html#modelspec.__post_init__', 'plijax/models/analytic.py'),
                'plijax.models.analytic.ModelSpec.d': ('models/analytic.html#modelspec.d', 'plijax/models/analytic.py'),
                'plijax.models.analytic.ModelSpec.can_evaluate': ('models/analytic.html#modelspec.can_evaluate', 'plijax/models/analytic.py'),
                'plijax.models.analytic.builtin_model': ('models/analytic.html#builtin_model', 'plijax/models/analytic.py'),
                'plijax.models.analytic.as_model_fn': ('models/analytic.html#as_model_fn', 'plijax/models/analytic.py'),
                'plijax.models.analytic.evaluate': ('models/analytic.html#evaluate', 'plijax/models/analytic.py')},
            'plijax.models.sample': {
                'plijax.models.sample.draw_inputs': ('models/sample.html#draw_inputs', 'plijax/models/sample.py'),
                'plijax.models.sample.generate_sample': ('models/sample.html#generate_sample', 'plijax/models/sample.py'),
                'plijax.models.sample.save_sample': ('models/sample.html#save_sample', 'plijax/models/sample.py'),
                'plijax.models.sample.load_sample': ('models/sample.html#load_sample', 'plijax/models/sample.py')},
            'plijax.robustness.epli': {
                'plijax.robustness.epli.EpliMode': ('robustness/epli.html#eplimode', 'plijax/robustness/epli.py'),
                'plijax.robustness.epli.StandardSpaceShift': ('robustness/epli.html#standardspaceshift', 'plijax/robustness/epli.py'),
                'plijax.robustness.epli.StandardSpaceShift.support': ('robustness/epli.html#standardspaceshift.support', 'plijax/robustness/epli.py'),
                'plijax.robustness.epli.StandardSpaceShift.integration_bounds': ('robustness/epli.html#standardspaceshift.integration_bounds', 'plijax/robustness/epli.py'),
                'plijax.robustness.epli.StandardSpaceShift.standard_score': ('robustness/epli.html#standardspaceshift.standard_score', 'plijax/robustness/epli.py'),
                'plijax.robustness.epli.StandardSpaceShift.log_likelihood_ratio': ('robustness/epli.html#standardspaceshift.log_likelihood_ratio', 'plijax/robustness/epli.py'),
                'plijax.robustness.epli.StandardSpaceShift.pdf': ('robustness/epli.html#standardspaceshift.pdf', 'plijax/robustness/epli.py'),
                'plijax.robustness.epli.StandardSpaceShift.logpdf': ('robustness/epli.html#standardspaceshift.logpdf', 'plijax/robustness/epli.py'),
                'plijax.robustness.epli.StandardSpaceShift.sample': ('robustness/epli.html#standardspaceshift.sample', 'plijax/robustness/epli.py'),
                'plijax.robustness.epli.epli_perturbed_density': ('robustness/epli.html#epli_perturbed_density', 'plijax/robustness/epli.py'),
                'plijax.robustness.epli.variance_perturbation': ('robustness/epli.html#variance_perturbation', 'plijax/robustness/epli.py'),
                'plijax.robustness.epli.kl_curve': ('robustness/epli.html#kl_curve', 'plijax/robustness/epli.py'),
                'plijax.robustness.epli.EpliCurve': ('robustness/epli.html#eplicurve', 'plijax/robustness/epli.py'),
                'plijax.robustness.epli.EpliCurve.to_frame': ('robustness/epli.html#eplicurve.to_frame', 'plijax/robustness/epli.py'),
                'plijax.robustness.epli.epli_curve': ('robustness/epli.html#epli_curve', 'plijax/robustness/epli.py')},
            'plijax.robustness.index': {
                'plijax.robustness.index.PliValue': ('robustness/index.html#plivalue', 'plijax/robustness/index.py'),
                'plijax.robustness.index.baseline_quantile': ('robustness/index.html#baseline_quantile', 'plijax/robustness/index.py'),
                'plijax.robustness.index.pli_detail': ('robustness/index.html#pli_detail', 'plijax/robustness/index.py'),
                'plijax.robustness.index.pli': ('robustness/index.html#pli', 'plijax/robustness/index.py'),
                'plijax.robustness.index.max_admissible_pli': ('robustness/index.html#max_admissible_pli', 'plijax/robustness/index.py'),
                'plijax.robustness.index.delta_grid': ('robustness/index.html#delta_grid', 'plijax/robustness/index.py')},
            'plijax.robustness.ofpli': {
                'plijax.robustness.ofpli.EstimatorMode': ('robustness/ofpli.html#estimatormode', 'plijax/robustness/ofpli.py'),
                'plijax.robustness.ofpli.DeltaLevel': ('robustness/ofpli.html#deltalevel', 'plijax/robustness/ofpli.py'),
                'plijax.robustness.ofpli.DeltaLevel.point_admissible': ('robustness/ofpli.html#deltalevel.point_admissible', 'plijax/robustness/ofpli.py'),
                'plijax.robustness.ofpli.DeltaLevel.admissible': ('robustness/ofpli.html#deltalevel.admissible', 'plijax/robustness/ofpli.py'),
                'plijax.robustness.ofpli.DeltaLevel.n_valid': ('robustness/ofpli.html#deltalevel.n_valid', 'plijax/robustness/ofpli.py'),
                'plijax.robustness.ofpli.DeltaLevel.selection': ('robustness/ofpli.html#deltalevel.selection', 'plijax/robustness/ofpli.py'),
                'plijax.robustness.ofpli.DeltaLevel.s_plus': ('robustness/ofpli.html#deltalevel.s_plus', 'plijax/robustness/ofpli.py'),
                'plijax.robustness.ofpli.DeltaLevel.s_minus': ('robustness/ofpli.html#deltalevel.s_minus', 'plijax/robustness/ofpli.py'),
                'plijax.robustness.ofpli.DeltaLevel.argmax_spec': ('robustness/ofpli.html#deltalevel.argmax_spec', 'plijax/robustness/ofpli.py'),
                'plijax.robustness.ofpli.DeltaLevel.argmin_spec': ('robustness/ofpli.html#deltalevel.argmin_spec', 'plijax/robustness/ofpli.py'),
                'plijax.robustness.ofpli.ofpli_at_delta': ('robustness/ofpli.html#ofpli_at_delta', 'plijax/robustness/ofpli.py'),
                'plijax.robustness.ofpli.PliCurve': ('robustness/ofpli.html#plicurve', 'plijax/robustness/ofpli.py'),
                'plijax.robustness.ofpli.PliCurve.deltas': ('robustness/ofpli.html#plicurve.deltas', 'plijax/robustness/ofpli.py'),
                'plijax.robustness.ofpli.PliCurve.s_plus': ('robustness/ofpli.html#plicurve.s_plus', 'plijax/robustness/ofpli.py'),
                'plijax.robustness.ofpli.PliCurve.s_minus': ('robustness/ofpli.html#plicurve.s_minus', 'plijax/robustness/ofpli.py'),
                'plijax.robustness.ofpli.PliCurve.n_valid': ('robustness/ofpli.html#plicurve.n_valid', 'plijax/robustness/ofpli.py'),
                'plijax.robustness.ofpli.PliCurve.admissible': ('robustness/ofpli.html#plicurve.admissible', 'plijax/robustness/ofpli.py'),
                'plijax.robustness.ofpli.PliCurve.delta_max': ('robustness/ofpli.html#plicurve.delta_max', 'plijax/robustness/ofpli.py'),
                'plijax.robustness.ofpli.PliCurve.to_frame': ('robustness/ofpli.html#plicurve.to_frame', 'plijax/robustness/ofpli.py'),
                'plijax.robustness.ofpli.PliCurve.sphere_frame': ('robustness/ofpli.html#plicurve.sphere_frame', 'plijax/robustness/ofpli.py'),
                'plijax.robustness.ofpli.ofpli_curve': ('robustness/ofpli.html#ofpli_curve', 'plijax/robustness/ofpli.py')},
            'plijax.scripts.cli': {
                'plijax.scripts.cli.RunResults': ('scripts/cli.html#runresults', 'plijax/scripts/cli.py'),
                'plijax.scripts.cli.emit_results': ('scripts/cli.html#emit_results', 'plijax/scripts/cli.py'),
                'plijax.scripts.cli.fim': ('scripts/cli.html#fim', 'plijax/scripts/cli.py'),
                'plijax.scripts.cli.geodesic': ('scripts/cli.html#geodesic', 'plijax/scripts/cli.py'),
                'plijax.scripts.cli.sphere': ('scripts/cli.html#sphere', 'plijax/scripts/cli.py'),
                'plijax.scripts.cli.pli': ('scripts/cli.html#pli', 'plijax/scripts/cli.py'),
                'plijax.scripts.cli.ofpli': ('scripts/cli.html#ofpli', 'plijax/scripts/cli.py'),
                'plijax.scripts.cli.epli': ('scripts/cli.html#epli', 'plijax/scripts/cli.py'),
                'plijax.scripts.cli.sobol': ('scripts/cli.html#sobol', 'plijax/scripts/cli.py'),
                'plijax.scripts.cli.demo': ('scripts/cli.html#demo', 'plijax/scripts/cli.py'),
                'plijax.scripts.cli.run': ('scripts/cli.html#run', 'plijax/scripts/cli.py'),
                'plijax.scripts.cli.main': ('scripts/cli.html#main', 'plijax/scripts/cli.py')},
            'plijax.scripts.config': {
                'plijax.scripts.config.RunConfig': ('scripts/config.html#runconfig', 'plijax/scripts/config.py'),
                'plijax.scripts.config.RunPlan': ('scripts/config.html#runplan', 'plijax/scripts/config.py'),
                'plijax.scripts.config.RunPlan.input_names': ('scripts/config.html#runplan.input_names', 'plijax/scripts/config.py'),
                'plijax.scripts.config.load_config': ('scripts/config.html#load_config', 'plijax/scripts/config.py'),
                'plijax.scripts.config.validate_config': ('scripts/config.html#validate_config', 'plijax/scripts/config.py'),
                'plijax.scripts.config.demo_config': ('scripts/config.html#demo_config', 'plijax/scripts/config.py')},
            'plijax.sensitivity.sobol': {
                'plijax.sensitivity.sobol.SobolResult': ('sensitivity/sobol.html#sobolresult', 'plijax/sensitivity/sobol.py'),
                'plijax.sensitivity.sobol.SobolResult.to_frame': ('sensitivity/sobol.html#sobolresult.to_frame', 'plijax/sensitivity/sobol.py'),
                'plijax.sensitivity.sobol.pick_freeze_outputs': ('sensitivity/sobol.html#pick_freeze_outputs', 'plijax/sensitivity/sobol.py'),
                'plijax.sensitivity.sobol.sobol_pick_freeze': ('sensitivity/sobol.html#sobol_pick_freeze', 'plijax/sensitivity/sobol.py'),
                'plijax.sensitivity.sobol.sobol_target': ('sensitivity/sobol.html#sobol_target', 'plijax/sensitivity/sobol.py'),
                'plijax.sensitivity.sobol.sobol_indices': ('sensitivity/sobol.html#sobol_indices', 'plijax/sensitivity/sobol.py')},
            'plijax.solver.geodesic': {
                'plijax.solver.geodesic.Integrator': ('solver/geodesic.html#integrator', 'plijax/solver/geodesic.py'),
                'plijax.solver.geodesic.Integrator.parse': ('solver/geodesic.html#integrator.parse', 'plijax/solver/geodesic.py'),
                'plijax.solver.geodesic.PathStatus': ('solver/geodesic.html#pathstatus', 'plijax/solver/geodesic.py'),
                'plijax.solver.geodesic.GeodesicPath': ('solver/geodesic.html#geodesicpath', 'plijax/solver/geodesic.py'),
                'plijax.solver.geodesic.GeodesicPath.drift': ('solver/geodesic.html#geodesicpath.drift', 'plijax/solver/geodesic.py'),
                'plijax.solver.geodesic.GeodesicPath.max_drift': ('solver/geodesic.html#geodesicpath.max_drift', 'plijax/solver/geodesic.py'),
                'plijax.solver.geodesic.GeodesicPath.endpoint': ('solver/geodesic.html#geodesicpath.endpoint', 'plijax/solver/geodesic.py'),
                'plijax.solver.geodesic.GeodesicPath.to_frame': ('solver/geodesic.html#geodesicpath.to_frame', 'plijax/solver/geodesic.py'),
                'plijax.solver.geodesic.HamiltonianSystem': ('solver/geodesic.html#hamiltoniansystem', 'plijax/solver/geodesic.py'),
                'plijax.solver.geodesic.HamiltonianSystem.__init__': ('solver/geodesic.html#hamiltoniansystem.__init__', 'plijax/solver/geodesic.py'),
                'plijax.solver.geodesic.HamiltonianSystem.hamiltonian': ('solver/geodesic.html#hamiltoniansystem.hamiltonian', 'plijax/solver/geodesic.py'),
                'plijax.solver.geodesic.HamiltonianSystem.vector_field': ('solver/geodesic.html#hamiltoniansystem.vector_field', 'plijax/solver/geodesic.py'),
                'plijax.solver.geodesic.HamiltonianSystem.healthy': ('solver/geodesic.html#hamiltoniansystem.healthy', 'plijax/solver/geodesic.py'),
                'plijax.solver.geodesic.HamiltonianSystem.solver': ('solver/geodesic.html#hamiltoniansystem.solver', 'plijax/solver/geodesic.py'),
                'plijax.solver.geodesic.HamiltonianSystem.integrate': ('solver/geodesic.html#hamiltoniansystem.integrate', 'plijax/solver/geodesic.py'),
                'plijax.solver.geodesic.get_system': ('solver/geodesic.html#get_system', 'plijax/solver/geodesic.py'),
                'plijax.solver.geodesic.integrate_geodesic': ('solver/geodesic.html#integrate_geodesic', 'plijax/solver/geodesic.py'),
                'plijax.solver.geodesic.hamiltonian_drift': ('solver/geodesic.html#hamiltonian_drift', 'plijax/solver/geodesic.py'),
                'plijax.solver.geodesic.path_length': ('solver/geodesic.html#path_length', 'plijax/solver/geodesic.py'),
                'plijax.solver.geodesic.path_energy': ('solver/geodesic.html#path_energy', 'plijax/solver/geodesic.py'),
                'plijax.solver.geodesic.drift_convergence': ('solver/geodesic.html#drift_convergence', 'plijax/solver/geodesic.py')},
            'plijax.solver.sphere': {
                'plijax.solver.sphere.sphere_directions': ('solver/sphere.html#sphere_directions', 'plijax/solver/sphere.py'),
                'plijax.solver.sphere.initial_momenta': ('solver/sphere.html#initial_momenta', 'plijax/solver/sphere.py'),
                'plijax.solver.sphere.screen_path': ('solver/sphere.html#screen_path', 'plijax/solver/sphere.py'),
                'plijax.solver.sphere.FisherSphere': ('solver/sphere.html#fishersphere', 'plijax/solver/sphere.py'),
                'plijax.solver.sphere.FisherSphere.K': ('solver/sphere.html#fishersphere.k', 'plijax/solver/sphere.py'),
                'plijax.solver.sphere.FisherSphere.statuses': ('solver/sphere.html#fishersphere.statuses', 'plijax/solver/sphere.py'),
                'plijax.solver.sphere.FisherSphere.valid': ('solver/sphere.html#fishersphere.valid', 'plijax/solver/sphere.py'),
                'plijax.solver.sphere.FisherSphere.n_valid': ('solver/sphere.html#fishersphere.n_valid', 'plijax/solver/sphere.py'),
                'plijax.solver.sphere.FisherSphere.valid_indices': ('solver/sphere.html#fishersphere.valid_indices', 'plijax/solver/sphere.py'),
                'plijax.solver.sphere.FisherSphere.points': ('solver/sphere.html#fishersphere.points', 'plijax/solver/sphere.py'),
                'plijax.solver.sphere.FisherSphere.max_drift': ('solver/sphere.html#fishersphere.max_drift', 'plijax/solver/sphere.py'),
                'plijax.solver.sphere.FisherSphere.measured_lengths': ('solver/sphere.html#fishersphere.measured_lengths', 'plijax/solver/sphere.py'),
                'plijax.solver.sphere.FisherSphere.to_frame': ('solver/sphere.html#fishersphere.to_frame', 'plijax/solver/sphere.py'),
                'plijax.solver.sphere.fisher_sphere': ('solver/sphere.html#fisher_sphere', 'plijax/solver/sphere.py'),
                'plijax.solver.sphere.gaussian_fisher_distance': ('solver/sphere.html#gaussian_fisher_distance', 'plijax/solver/sphere.py'),
                'plijax.solver.sphere.triangular_fisher_distance': ('solver/sphere.html#triangular_fisher_distance', 'plijax/solver/sphere.py'),
                'plijax.solver.sphere.sphere_density_table': ('solver/sphere.html#sphere_density_table', 'plijax/solver/sphere.py')},
            'plijax.utils.errors': {
                'plijax.utils.errors.PliError': ('utils/errors.html#plierror', 'plijax/utils/errors.py'),
                'plijax.utils.errors.DomainError': ('utils/errors.html#domainerror', 'plijax/utils/errors.py'),
                'plijax.utils.errors.SampleError': ('utils/errors.html#sampleerror', 'plijax/utils/errors.py'),
                'plijax.utils.errors.SampleError.__init__': ('utils/errors.html#sampleerror.__init__', 'plijax/utils/errors.py'),
                'plijax.utils.errors.NumericalError': ('utils/errors.html#numericalerror', 'plijax/utils/errors.py'),
                'plijax.utils.errors.NumericalError.__init__': ('utils/errors.html#numericalerror.__init__', 'plijax/utils/errors.py'),
                'plijax.utils.errors.SphereEmptyError': ('utils/errors.html#sphereemptyerror', 'plijax/utils/errors.py'),
                'plijax.utils.errors.UnsupportedError': ('utils/errors.html#unsupportederror', 'plijax/utils/errors.py'),
                'plijax.utils.errors.UnsupportedFamilyError': ('utils/errors.html#unsupportedfamilyerror', 'plijax/utils/errors.py'),
                'plijax.utils.errors.ConfigError': ('utils/errors.html#configerror', 'plijax/utils/errors.py'),
                'plijax.utils.errors.ConfigError.__init__': ('utils/errors.html#configerror.__init__', 'plijax/utils/errors.py')},
            'plijax.utils.parallel': {
                'plijax.utils.parallel.set_threads': ('utils/parallel.html#set_threads', 'plijax/utils/parallel.py'),
                'plijax.utils.parallel.get_threads': ('utils/parallel.html#get_threads', 'plijax/utils/parallel.py'),
                'plijax.utils.parallel.seed_sequence': ('utils/parallel.html#seed_sequence', 'plijax/utils/parallel.py'),
                'plijax.utils.parallel.derive_seed': ('utils/parallel.html#derive_seed', 'plijax/utils/parallel.py'),
                'plijax.utils.parallel.derive_rng': ('utils/parallel.html#derive_rng', 'plijax/utils/parallel.py'),
                'plijax.utils.parallel.parallel_map': ('utils/parallel.html#parallel_map', 'plijax/utils/parallel.py'),
                'plijax.utils.parallel.set_progress': ('utils/parallel.html#set_progress', 'plijax/utils/parallel.py'),
                'plijax.utils.parallel.progress': ('utils/parallel.html#progress', 'plijax/utils/parallel.py')}}}
