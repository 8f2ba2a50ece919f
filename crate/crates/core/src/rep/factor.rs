use crate::field::Field;

use super::{Morphism, Representation, Submodule};

/// Kernel, image and cokernel of a morphism with their structure maps.
#[derive(Clone, Debug)]
pub struct Factorization<F: Field> {
    pub kernel: Representation<F>,
    pub kernel_inclusion: Morphism<F>,
    pub image: Representation<F>,
    /// `source -> image`, surjective.
    pub coimage_map: Morphism<F>,
    /// `image -> target`, injective.
    pub image_inclusion: Morphism<F>,
    pub cokernel: Representation<F>,
    pub cokernel_projection: Morphism<F>,
}

pub fn factor<F: Field>(f: &Morphism<F>) -> Factorization<F> {
    let src = f.source();
    let tgt = f.target();
    let n = src.dims().len();

    let ker = Submodule::from_bases_unchecked((0..n).map(|v| f.map(v).nullspace()).collect());
    debug_assert!(ker.is_submodule_of(src));
    let (kernel, kernel_inclusion) = ker.to_module(src);

    let im = Submodule::from_bases_unchecked((0..n).map(|v| f.map(v).column_space()).collect());
    debug_assert!(im.is_submodule_of(tgt));
    let (image, image_inclusion) = im.to_module(tgt);
    let coimage_maps = (0..n)
        .map(|v| im.basis(v).solve(f.map(v)).expect("f lands in its image"))
        .collect();
    let coimage_map = Morphism::from_parts(src.clone(), image.clone(), coimage_maps);

    let (cokernel, cokernel_projection) = im.quotient(tgt);

    Factorization {
        kernel,
        kernel_inclusion,
        image,
        coimage_map,
        image_inclusion,
        cokernel,
        cokernel_projection,
    }
}
