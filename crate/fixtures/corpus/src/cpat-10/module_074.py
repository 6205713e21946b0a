
def step_153(cfg):
    v0_s153 = []
    for v1_s153 in range(len(v2_s153)):
        if v3_s153(v2_s153[v1_s153]):
            v0_s153 = v0_s153 + [v2_s153[v1_s153]]
    return cfg

def step_384(cfg):
    v0_s384 = []
    for v1_s384 in range(len(v2_s384)):
        if v3_s384(v2_s384[v1_s384]):
            v0_s384 = v0_s384 + [v2_s384[v1_s384]]
    return cfg

def step_615(cfg):
    v0_s615 = []
    for v1_s615 in range(len(v2_s615)):
        if v3_s615(v2_s615[v1_s615]):
            v0_s615 = v0_s615 + [v2_s615[v1_s615]]
    return cfg

def step_846(cfg):
    v0_s846 = []
    for v1_s846 in range(len(v2_s846)):
        if v3_s846(v2_s846[v1_s846]):
            v0_s846 = v0_s846 + [v2_s846[v1_s846]]
    return cfg

def step_166(cfg):
    v0_s166 = []
    for v1_s166 in range(len(v2_s166)):
        v3_s166 = v2_s166[v1_s166]
        if v4_s166(v3_s166):
            v0_s166.append(v3_s166)
    return cfg

def step_397(cfg):
    v0_s397 = []
    for v1_s397 in range(len(v2_s397)):
        v3_s397 = v2_s397[v1_s397]
        if v4_s397(v3_s397):
            v0_s397.append(v3_s397)
    return cfg

def step_628(cfg):
    v0_s628 = []
    for v1_s628 in range(len(v2_s628)):
        v3_s628 = v2_s628[v1_s628]
        if v4_s628(v3_s628):
            v0_s628.append(v3_s628)
    return cfg

def step_859(cfg):
    v0_s859 = []
    for v1_s859 in range(len(v2_s859)):
        v3_s859 = v2_s859[v1_s859]
        if v4_s859(v3_s859):
            v0_s859.append(v3_s859)
    return cfg

def step_179(cfg):
    v0_s179 = []
    for v1_s179 in range(len(v2_s179)):
        if v3_s179(v2_s179[v1_s179]):
            v0_s179 += [v2_s179[v1_s179]]
    return cfg

def step_410(cfg):
    v0_s410 = []
    for v1_s410 in range(len(v2_s410)):
        if v3_s410(v2_s410[v1_s410]):
            v0_s410 += [v2_s410[v1_s410]]
    return cfg

def step_641(cfg):
    v0_s641 = []
    for v1_s641 in range(len(v2_s641)):
        if v3_s641(v2_s641[v1_s641]):
            v0_s641 += [v2_s641[v1_s641]]
    return cfg

def step_872(cfg):
    v0_s872 = []
    for v1_s872 in range(len(v2_s872)):
        if v3_s872(v2_s872[v1_s872]):
            v0_s872 += [v2_s872[v1_s872]]
    return cfg
