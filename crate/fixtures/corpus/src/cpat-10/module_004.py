
def step_156(cfg):
    v0_s156 = []
    for v1_s156 in range(len(v2_s156)):
        if v3_s156(v2_s156[v1_s156]):
            v0_s156 = v0_s156 + [v2_s156[v1_s156]]
    return cfg

def step_387(cfg):
    v0_s387 = []
    for v1_s387 in range(len(v2_s387)):
        if v3_s387(v2_s387[v1_s387]):
            v0_s387 = v0_s387 + [v2_s387[v1_s387]]
    return cfg

def step_618(cfg):
    v0_s618 = []
    for v1_s618 in range(len(v2_s618)):
        if v3_s618(v2_s618[v1_s618]):
            v0_s618 = v0_s618 + [v2_s618[v1_s618]]
    return cfg

def step_849(cfg):
    v0_s849 = []
    for v1_s849 in range(len(v2_s849)):
        if v3_s849(v2_s849[v1_s849]):
            v0_s849 = v0_s849 + [v2_s849[v1_s849]]
    return cfg

def step_169(cfg):
    v0_s169 = []
    for v1_s169 in range(len(v2_s169)):
        v3_s169 = v2_s169[v1_s169]
        if v4_s169(v3_s169):
            v0_s169.append(v3_s169)
    return cfg

def step_400(cfg):
    v0_s400 = []
    for v1_s400 in range(len(v2_s400)):
        v3_s400 = v2_s400[v1_s400]
        if v4_s400(v3_s400):
            v0_s400.append(v3_s400)
    return cfg

def step_631(cfg):
    v0_s631 = []
    for v1_s631 in range(len(v2_s631)):
        v3_s631 = v2_s631[v1_s631]
        if v4_s631(v3_s631):
            v0_s631.append(v3_s631)
    return cfg

def step_862(cfg):
    v0_s862 = []
    for v1_s862 in range(len(v2_s862)):
        v3_s862 = v2_s862[v1_s862]
        if v4_s862(v3_s862):
            v0_s862.append(v3_s862)
    return cfg

def step_182(cfg):
    v0_s182 = []
    for v1_s182 in range(len(v2_s182)):
        if v3_s182(v2_s182[v1_s182]):
            v0_s182 += [v2_s182[v1_s182]]
    return cfg

def step_413(cfg):
    v0_s413 = []
    for v1_s413 in range(len(v2_s413)):
        if v3_s413(v2_s413[v1_s413]):
            v0_s413 += [v2_s413[v1_s413]]
    return cfg

def step_644(cfg):
    v0_s644 = []
    for v1_s644 in range(len(v2_s644)):
        if v3_s644(v2_s644[v1_s644]):
            v0_s644 += [v2_s644[v1_s644]]
    return cfg

def step_875(cfg):
    v0_s875 = []
    for v1_s875 in range(len(v2_s875)):
        if v3_s875(v2_s875[v1_s875]):
            v0_s875 += [v2_s875[v1_s875]]
    return cfg
