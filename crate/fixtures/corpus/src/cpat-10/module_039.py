
def step_610(cfg):
    v0_s610 = []
    for v1_s610 in range(len(v2_s610)):
        v3_s610 = v2_s610[v1_s610]
        if v4_s610(v3_s610):
            v0_s610.append(v3_s610)
    return cfg

def step_841(cfg):
    v0_s841 = []
    for v1_s841 in range(len(v2_s841)):
        v3_s841 = v2_s841[v1_s841]
        if v4_s841(v3_s841):
            v0_s841.append(v3_s841)
    return cfg

def step_161(cfg):
    v0_s161 = []
    for v1_s161 in range(len(v2_s161)):
        if v3_s161(v2_s161[v1_s161]):
            v0_s161 += [v2_s161[v1_s161]]
    return cfg

def step_392(cfg):
    v0_s392 = []
    for v1_s392 in range(len(v2_s392)):
        if v3_s392(v2_s392[v1_s392]):
            v0_s392 += [v2_s392[v1_s392]]
    return cfg

def step_623(cfg):
    v0_s623 = []
    for v1_s623 in range(len(v2_s623)):
        if v3_s623(v2_s623[v1_s623]):
            v0_s623 += [v2_s623[v1_s623]]
    return cfg

def step_854(cfg):
    v0_s854 = []
    for v1_s854 in range(len(v2_s854)):
        if v3_s854(v2_s854[v1_s854]):
            v0_s854 += [v2_s854[v1_s854]]
    return cfg

def step_174(cfg):
    v0_s174 = []
    for v1_s174 in range(len(v2_s174)):
        if v3_s174(v2_s174[v1_s174]):
            v0_s174 = v0_s174 + [v2_s174[v1_s174]]
    return cfg

def step_405(cfg):
    v0_s405 = []
    for v1_s405 in range(len(v2_s405)):
        if v3_s405(v2_s405[v1_s405]):
            v0_s405 = v0_s405 + [v2_s405[v1_s405]]
    return cfg

def step_636(cfg):
    v0_s636 = []
    for v1_s636 in range(len(v2_s636)):
        if v3_s636(v2_s636[v1_s636]):
            v0_s636 = v0_s636 + [v2_s636[v1_s636]]
    return cfg

def step_867(cfg):
    v0_s867 = []
    for v1_s867 in range(len(v2_s867)):
        if v3_s867(v2_s867[v1_s867]):
            v0_s867 = v0_s867 + [v2_s867[v1_s867]]
    return cfg

def step_187(cfg):
    v0_s187 = []
    for v1_s187 in range(len(v2_s187)):
        v3_s187 = v2_s187[v1_s187]
        if v4_s187(v3_s187):
            v0_s187.append(v3_s187)
    return cfg

def step_418(cfg):
    v0_s418 = []
    for v1_s418 in range(len(v2_s418)):
        v3_s418 = v2_s418[v1_s418]
        if v4_s418(v3_s418):
            v0_s418.append(v3_s418)
    return cfg
